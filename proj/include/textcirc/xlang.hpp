// Copyright 2026 The textcirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file xlang.hpp
 *
 * English/Urdu translation of syntax trees and hybrid texts, and the check
 * that compiling a text and compiling its translation give the same circuit
 * up to gate-label translation.
 *
 * Trees translate node by node: each internal node keeps its rule and its
 * children are re-laid in the target generator's surface order; leaves go
 * through the lexicon. Entity indices ride along unchanged, which is what
 * lets links be carried over.
 * Hybrid-text isomorphism is taken to mean exactly this: sentence-wise tree
 * isomorphism plus links whose endpoints are the images of the originals.
 */
#pragma once

#include <string>
#include <vector>

#include "textcirc/error.hpp"
#include "textcirc/grammar.hpp"
#include "textcirc/hybrid.hpp"
#include "textcirc/lexicon.hpp"
#include "textcirc/text_circuit.hpp"

namespace textcirc {

namespace detail {

inline SyntaxTree translate_node(const SyntaxTree& node, const GeneratorTable& source,
                                 const GeneratorTable& target, const Lexicon& lexicon,
                                 Direction dir) {
  if (node.is_leaf()) {
    SyntaxTree out = node;
    if (node.label == Symbol::COP) {
      out.word = function_words(target.language()).copula;
    } else {
      out.word = lexicon.translate(*node.word, node.label, dir);
    }
    return out;
  }
  const Generator* g = match_rule(node, source);
  const Generator* tg = target.find(g->rule);
  SyntaxTree out;
  out.label = node.label;
  for (std::size_t slot : tg->slots) {
    out.children.push_back(
        translate_node(node.children[g->surface_of(slot)], source, target, lexicon, dir));
  }
  return out;
}

}  // namespace detail

inline SyntaxTree translate_tree(const SyntaxTree& tree, const Lexicon& lexicon, Direction dir) {
  const auto& source = GeneratorTable::for_language(source_language(dir));
  const auto& target = GeneratorTable::for_language(other(source_language(dir)));
  require_valid(tree, source);
  return detail::translate_node(tree, source, target, lexicon, dir);
}

/// Image of a surface path under translation of `tree`.
inline TreePath translate_path(const SyntaxTree& tree, const TreePath& path, Direction dir) {
  const auto& source = GeneratorTable::for_language(source_language(dir));
  const auto& target = GeneratorTable::for_language(other(source_language(dir)));
  TreePath out;
  const SyntaxTree* node = &tree;
  for (std::size_t i : path) {
    const Generator* g = match_rule(*node, source);
    if (g == nullptr || i >= node->children.size()) {
      throw Error(ErrorCode::InvalidOccurrence, "path " + path_to_string(path) + " leaves the tree");
    }
    out.push_back(target.find(g->rule)->surface_of(g->slots[i]));
    node = &node->children[i];
  }
  return out;
}

inline HybridText translate_text(const HybridText& text, const Lexicon& lexicon, Direction dir) {
  if (text.language != source_language(dir)) {
    throw Error(ErrorCode::ValidationFailure,
                "text is " + std::string(to_string(text.language)) + ", translation expects " +
                    std::string(to_string(source_language(dir))));
  }
  require_valid_links(text);
  HybridText out;
  out.language = other(text.language);
  for (const auto& s : text.sentences) out.sentences.push_back(translate_tree(s, lexicon, dir));
  for (const auto& link : text.links) {
    out.links.push_back(
        {{link.referent.sentence,
          translate_path(text.sentences[link.referent.sentence], link.referent.path, dir)},
         {link.anaphor.sentence,
          translate_path(text.sentences[link.anaphor.sentence], link.anaphor.path, dir)},
         link.surface});
  }
  return out;
}

struct CommutingReport {
  bool equal = false;
  /// Canonical form of the source text's circuit with labels sent through
  /// the dictionary.
  std::string canonical_source_translated;
  /// Canonical form of the translated text's circuit.
  std::string canonical_target;
};

/// Compile, translate-then-compile, and compare up to the dictionary.
inline CommutingReport verify_commuting(const HybridText& text, const Lexicon& lexicon) {
  const Direction dir = direction_from(text.language);
  const TextCircuit source = compile_text(text);
  const TextCircuit target = compile_text(translate_text(text, lexicon, dir));
  CommutingReport report;
  report.canonical_source_translated = canonicalize(map_labels(source, lexicon, dir));
  report.canonical_target = canonicalize(target);
  report.equal = report.canonical_source_translated == report.canonical_target;
  return report;
}

}  // namespace textcirc
