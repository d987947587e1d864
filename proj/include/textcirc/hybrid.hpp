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
 * @file hybrid.hpp
 *
 * Hybrid texts: sequences of sentence trees plus explicit pronominal links
 * between NP occurrences. Coreference is always given, never inferred.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "textcirc/error.hpp"
#include "textcirc/grammar.hpp"

namespace textcirc {

/// Address of an NP leaf. Ordering is text order: sentence first, then
/// left to right (lexicographic surface paths enumerate leaves in order).
struct NpOccurrence {
  std::size_t sentence = 0;
  TreePath path;

  friend auto operator<=>(const NpOccurrence&, const NpOccurrence&) = default;
  friend bool operator==(const NpOccurrence&, const NpOccurrence&) = default;
};

enum class LinkSurface { Pronoun, RelativePronoun, RepeatedNoun };

inline std::string_view to_string(LinkSurface s) {
  switch (s) {
    case LinkSurface::Pronoun: return "pronoun";
    case LinkSurface::RelativePronoun: return "relative_pronoun";
    case LinkSurface::RepeatedNoun: return "repeated_noun";
  }
  return "?";
}

inline std::optional<LinkSurface> link_surface_from_string(std::string_view text) {
  for (auto s : {LinkSurface::Pronoun, LinkSurface::RelativePronoun,
                 LinkSurface::RepeatedNoun}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

struct PronominalLink {
  NpOccurrence referent;
  NpOccurrence anaphor;
  LinkSurface surface = LinkSurface::Pronoun;

  friend bool operator==(const PronominalLink&, const PronominalLink&) = default;
};

struct HybridText {
  Language language = Language::English;
  std::vector<SyntaxTree> sentences;
  std::vector<PronominalLink> links;

  friend bool operator==(const HybridText&, const HybridText&) = default;
};

inline std::string to_string(const NpOccurrence& occ) {
  return std::to_string(occ.sentence) + ":" + path_to_string(occ.path);
}

/// The NP leaf at `occ`, or nullptr.
inline const SyntaxTree* resolve(const HybridText& text, const NpOccurrence& occ) {
  if (occ.sentence >= text.sentences.size()) return nullptr;
  const SyntaxTree* node = at_path(text.sentences[occ.sentence], occ.path);
  if (node == nullptr || !node->is_leaf() || node->label != Symbol::NP) return nullptr;
  return node;
}

inline SyntaxTree* resolve(HybridText& text, const NpOccurrence& occ) {
  return const_cast<SyntaxTree*>(resolve(std::as_const(text), occ));
}

/// All NP leaves of the text in text order.
inline std::vector<NpOccurrence> np_occurrences(const HybridText& text) {
  std::vector<NpOccurrence> out;
  for (std::size_t s = 0; s < text.sentences.size(); ++s) {
    TreePath path;
    auto rec = [&](auto&& self, const SyntaxTree& node) -> void {
      if (node.is_leaf()) {
        if (node.label == Symbol::NP) out.push_back({s, path});
        return;
      }
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        path.push_back(i);
        self(self, node.children[i]);
        path.pop_back();
      }
    };
    rec(rec, text.sentences[s]);
  }
  return out;
}

namespace detail {

inline void check_link(const HybridText& text, const PronominalLink& link) {
  if (resolve(text, link.referent) == nullptr) {
    throw Error(ErrorCode::InvalidOccurrence,
                "referent " + to_string(link.referent) + " is not an NP leaf");
  }
  if (resolve(text, link.anaphor) == nullptr) {
    throw Error(ErrorCode::InvalidOccurrence,
                "anaphor " + to_string(link.anaphor) + " is not an NP leaf");
  }
  if (link.referent == link.anaphor) {
    throw Error(ErrorCode::InvalidOccurrence,
                "link from " + to_string(link.referent) + " to itself");
  }
  if (link.anaphor < link.referent) {
    throw Error(ErrorCode::OrderViolation, "anaphor " + to_string(link.anaphor) +
                                               " precedes referent " +
                                               to_string(link.referent));
  }
  if (link.surface == LinkSurface::RelativePronoun &&
      link.referent.sentence != link.anaphor.sentence) {
    throw Error(ErrorCode::OrderViolation,
                "relative pronoun link crosses sentences at " + to_string(link.anaphor));
  }
}

inline void rename_entity(HybridText& text, int from, int to) {
  if (from == to) return;
  for (const auto& occ : np_occurrences(text)) {
    SyntaxTree* leaf = resolve(text, occ);
    if (leaf->entity == from) leaf->entity = to;
  }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // keep the smaller (earlier) root so roots are first mentions
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Link sanity over a whole text: endpoints resolve, order holds, and no
/// anaphor has two referents.
inline void require_valid_links(const HybridText& text) {
  std::set<NpOccurrence> anaphors;
  for (const auto& link : text.links) {
    detail::check_link(text, link);
    if (!anaphors.insert(link.anaphor).second) {
      throw Error(ErrorCode::DoubleLink, "anaphor " + to_string(link.anaphor) +
                                             " has more than one referent");
    }
  }
}

/// Sentence trees validate against `table` and links are well formed.
inline void require_valid_text(const HybridText& text, const GeneratorTable& table) {
  for (std::size_t s = 0; s < text.sentences.size(); ++s) {
    auto report = validate(text.sentences[s], table);
    if (!report.ok()) {
      const auto& v = report.violations.front();
      throw Error(ErrorCode::ValidationFailure, "sentence " + std::to_string(s) + " at " +
                                                    path_to_string(v.path) + ": " + v.message);
    }
  }
  require_valid_links(text);
}

inline HybridText add_link(HybridText text, const PronominalLink& link) {
  detail::check_link(text, link);
  for (const auto& existing : text.links) {
    if (existing.anaphor == link.anaphor) {
      throw Error(ErrorCode::DoubleLink,
                  "anaphor " + to_string(link.anaphor) + " is already linked");
    }
  }
  const int referent_index = *resolve(text, link.referent)->entity;
  const int anaphor_index = *resolve(text, link.anaphor)->entity;
  detail::rename_entity(text, anaphor_index, referent_index);
  text.links.push_back(link);
  return text;
}

struct Entity {
  /// Index carried by the first mention.
  int index = 0;
  std::vector<NpOccurrence> occurrences;
};

/// Partition of NP occurrences by "same index or linked", first-mention order.
inline std::vector<Entity> entities(const HybridText& text) {
  const auto occs = np_occurrences(text);
  std::map<NpOccurrence, std::size_t> position;
  for (std::size_t i = 0; i < occs.size(); ++i) position[occs[i]] = i;
  detail::UnionFind uf(occs.size());
  std::map<int, std::size_t> first_with_index;
  for (std::size_t i = 0; i < occs.size(); ++i) {
    const int idx = *resolve(text, occs[i])->entity;
    auto [it, fresh] = first_with_index.emplace(idx, i);
    if (!fresh) uf.unite(it->second, i);
  }
  for (const auto& link : text.links) {
    auto r = position.find(link.referent);
    auto a = position.find(link.anaphor);
    if (r == position.end() || a == position.end()) {
      throw Error(ErrorCode::InvalidOccurrence, "link endpoint is not an NP leaf");
    }
    uf.unite(r->second, a->second);
  }
  std::map<std::size_t, std::size_t> class_of_root;
  std::vector<Entity> out;
  for (std::size_t i = 0; i < occs.size(); ++i) {
    const std::size_t root = uf.find(i);
    auto [it, fresh] = class_of_root.emplace(root, out.size());
    if (fresh) out.push_back({*resolve(text, occs[i])->entity, {}});
    out[it->second].occurrences.push_back(occs[i]);
  }
  return out;
}

/// Rewrites entity indices so each class carries its first mention's index.
inline HybridText unify_entities(HybridText text) {
  for (const auto& e : entities(text)) {
    for (const auto& occ : e.occurrences) resolve(text, occ)->entity = e.index;
  }
  return text;
}

namespace detail {

/// True when `path` passes into a phrase-scope region (a complement or a
/// conjunct).
inline bool path_enters_scope(const SyntaxTree& tree, const TreePath& path,
                              const GeneratorTable& table) {
  const SyntaxTree* node = &tree;
  for (std::size_t i : path) {
    const Generator* g = match_rule(*node, table);
    if (g != nullptr && g->scope_introducing && node->children[i].label == Symbol::S) {
      return true;
    }
    node = &node->children[i];
  }
  return false;
}

inline bool is_prefix(const TreePath& prefix, const TreePath& path) {
  return prefix.size() <= path.size() &&
         std::equal(prefix.begin(), prefix.end(), path.begin());
}

}  // namespace detail

/**
 * Adjoins sentence i (holding the referent as its bare subject) into
 * sentence i+1 as a relative clause on the anaphor NP. The anaphor position
 * takes the referent's word and the referent becomes the relative pronoun.
 * The link is added first if the text does not carry it yet.
 */
inline HybridText fuse(const HybridText& input, const PronominalLink& link) {
  const auto& table = GeneratorTable::for_language(input.language);
  detail::check_link(input, link);
  if (link.anaphor.sentence != link.referent.sentence + 1) {
    throw Error(ErrorCode::NonAdjacent, "cannot fuse sentences " +
                                            std::to_string(link.referent.sentence) + " and " +
                                            std::to_string(link.anaphor.sentence));
  }
  HybridText text = input;
  auto present = std::find_if(text.links.begin(), text.links.end(), [&](const auto& l) {
    return l.referent == link.referent && l.anaphor == link.anaphor;
  });
  if (present == text.links.end()) {
    text = add_link(std::move(text), link);
  }

  const std::size_t i = link.referent.sentence;
  const std::size_t j = link.anaphor.sentence;
  const SyntaxTree& rel_tree = text.sentences[i];
  const SyntaxTree& main_tree = text.sentences[j];

  if (detail::path_enters_scope(rel_tree, link.referent.path, table)) {
    throw Error(ErrorCode::ScopeEscape,
                "referent " + to_string(link.referent) + " lies inside phrase scope");
  }
  if (detail::path_enters_scope(main_tree, link.anaphor.path, table)) {
    throw Error(ErrorCode::ScopeEscape,
                "anaphor " + to_string(link.anaphor) + " lies inside phrase scope");
  }
  // Only a bare subject can become the relative pronoun.
  const Generator* root_rule = match_rule(rel_tree, table);
  const bool bare_subject = root_rule != nullptr && root_rule->canonical_rhs()[0] == Symbol::NP &&
                            link.referent.path == TreePath{root_rule->surface_of(0)};
  if (!bare_subject) {
    throw Error(ErrorCode::NotFusable, "referent " + to_string(link.referent) +
                                           " is not the unmodified subject of its sentence");
  }
  // A relative clause met earlier in canonical order would be emitted before
  // the new one and reorder elements that used to follow sentence i.
  {
    bool reached = false;
    std::optional<TreePath> blocker;
    visit_canonical(main_tree, table, [&](const SyntaxTree& node, const TreePath& path) {
      if (reached || blocker) return;
      if (path == link.anaphor.path) {
        reached = true;
        return;
      }
      if (!node.is_leaf() && match_rule(node, table)->rule == RuleId::Relative &&
          !detail::is_prefix(path, link.anaphor.path)) {
        blocker = path;
      }
    });
    if (blocker) {
      throw Error(ErrorCode::NotFusable, "relative clause at " + path_to_string(*blocker) +
                                             " precedes the attachment point");
    }
  }

  const TreePath& attach = link.anaphor.path;
  TreePath main_np = attach;
  main_np.push_back(0);
  TreePath clause_root = attach;
  clause_root.push_back(1);

  SyntaxTree clause = rel_tree;
  SyntaxTree* pronoun_leaf = at_path(clause, link.referent.path);
  const std::string noun = *pronoun_leaf->word;
  pronoun_leaf->word = function_words(text.language).relative_pronoun;

  SyntaxTree fused = main_tree;
  SyntaxTree* slot = at_path(fused, attach);
  SyntaxTree head = *slot;
  head.word = noun;
  *slot = SyntaxTree::node(Symbol::NP, {std::move(head), std::move(clause)});

  auto remap = [&](const NpOccurrence& occ) -> NpOccurrence {
    if (occ.sentence < i) return occ;
    if (occ.sentence == i) {
      TreePath p = clause_root;
      p.insert(p.end(), occ.path.begin(), occ.path.end());
      return {i, p};
    }
    if (occ.sentence == j) {
      if (occ.path == attach) return {i, main_np};
      return {i, occ.path};
    }
    return {occ.sentence - 1, occ.path};
  };

  HybridText out;
  out.language = text.language;
  for (std::size_t s = 0; s < text.sentences.size(); ++s) {
    if (s == i) continue;
    out.sentences.push_back(s == j ? fused : text.sentences[s]);
  }
  const NpOccurrence new_main{i, main_np};
  const NpOccurrence new_pronoun = remap(link.referent);
  for (const auto& l : text.links) {
    if (l.anaphor == link.anaphor) continue;  // replaced below
    PronominalLink m{remap(l.referent), remap(l.anaphor), l.surface};
    // the old subject's role as referent/anaphor moves to the head noun
    if (l.referent == link.referent) m.referent = new_main;
    if (l.anaphor == link.referent) m.anaphor = new_main;
    out.links.push_back(m);
  }
  out.links.push_back({new_main, new_pronoun, LinkSurface::RelativePronoun});
  try {
    require_valid_links(out);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotFusable, std::string("fusion breaks link structure: ") + e.what());
  }
  return out;
}

}  // namespace textcirc
