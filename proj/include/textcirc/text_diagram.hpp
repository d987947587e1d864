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
 * @file text_diagram.hpp
 *
 * Text diagrams: the S type of every sentence is replaced by its noun
 * wires, phrase scope becomes nesting (a box owning inner diagrams), and
 * cross-sentence pronominal links become dashed wires that compose() glues.
 *
 * Within a sentence, boxes are laid out as
 *   [relative clauses] [prenominal adjectives] [main element(s)]
 * with relative clauses and adjectives hoisted out of complements and
 * conjuncts. Relative clauses are the sentences fusion folded in, so they
 * run first; adjectives qualify nouns before the main verb acts on them.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "textcirc/error.hpp"
#include "textcirc/grammar.hpp"
#include "textcirc/hybrid.hpp"

namespace textcirc {

enum class BoxKind {
  Adjective,
  IvGate,
  TvGate,
  AdverbBox,
  AdpositionBox,
  ScopeBox,
  ConjBox,
  Copula,
};

inline std::string_view to_string(BoxKind k) {
  switch (k) {
    case BoxKind::Adjective: return "adjective";
    case BoxKind::IvGate: return "iv_gate";
    case BoxKind::TvGate: return "tv_gate";
    case BoxKind::AdverbBox: return "adverb_box";
    case BoxKind::AdpositionBox: return "adposition_box";
    case BoxKind::ScopeBox: return "scope_box";
    case BoxKind::ConjBox: return "conj_box";
    case BoxKind::Copula: return "copula";
  }
  return "?";
}

struct DiagramBox;

struct DiagramWire {
  int id = 0;
  std::string noun;
  /// Anaphoric wire awaiting its referent (pre-composition only).
  bool dashed = false;

  friend bool operator==(const DiagramWire&, const DiagramWire&) = default;
};

struct DanglingLink {
  std::size_t referent_fragment = 0;
  int referent_wire = 0;
  std::size_t anaphor_fragment = 0;
  int anaphor_wire = 0;

  friend bool operator==(const DanglingLink&, const DanglingLink&) = default;
};

struct TextDiagram {
  std::vector<DiagramWire> wires;
  std::vector<DiagramBox> boxes;
  std::vector<DanglingLink> dangling_links;

  friend bool operator==(const TextDiagram&, const TextDiagram&) = default;
};

/// Noun wires pass straight through every box, so one list serves as both
/// inputs and outputs.
struct DiagramBox {
  BoxKind kind = BoxKind::IvGate;
  std::string label;
  std::vector<int> wires;
  /// Adverb/adposition/scope boxes own one inner diagram, conj boxes two.
  std::vector<TextDiagram> inner;

  std::size_t arity() const { return wires.size(); }

  friend bool operator==(const DiagramBox&, const DiagramBox&) = default;
};

namespace detail {

inline void append_unique(std::vector<int>& into, const std::vector<int>& from) {
  for (int w : from) {
    if (std::find(into.begin(), into.end(), w) == into.end()) into.push_back(w);
  }
}

inline std::vector<int> wires_of(const std::vector<DiagramBox>& boxes) {
  std::vector<int> out;
  for (const auto& b : boxes) append_unique(out, b.wires);
  return out;
}

inline TextDiagram inner_diagram(std::vector<DiagramBox> boxes) {
  TextDiagram d;
  for (int w : wires_of(boxes)) d.wires.push_back({w, {}, false});
  d.boxes = std::move(boxes);
  return d;
}

inline void require_distinct(const std::vector<int>& wires, std::string_view what) {
  std::set<int> seen(wires.begin(), wires.end());
  if (seen.size() != wires.size()) {
    throw Error(ErrorCode::ArityViolation,
                std::string(what) + " would act twice on one noun wire");
  }
}

class FragmentBuilder {
 public:
  explicit FragmentBuilder(const GeneratorTable& table) : table_(table) {}

  std::vector<DiagramBox> sentence(const SyntaxTree& s) {
    std::vector<DiagramBox> relatives;
    std::vector<DiagramBox> adjectives;
    prelude(s, relatives, adjectives);
    auto main = main_of(s);
    relatives.insert(relatives.end(), std::make_move_iterator(adjectives.begin()),
                     std::make_move_iterator(adjectives.end()));
    relatives.insert(relatives.end(), std::make_move_iterator(main.begin()),
                     std::make_move_iterator(main.end()));
    return relatives;
  }

 private:
  static std::vector<DiagramBox> single(DiagramBox box) {
    std::vector<DiagramBox> out;
    out.push_back(std::move(box));
    return out;
  }

  const SyntaxTree& slot(const SyntaxTree& node, std::size_t k) {
    return node.children[match_rule(node, table_)->surface_of(k)];
  }

  RuleId rule(const SyntaxTree& node) { return match_rule(node, table_)->rule; }

  int entity(const SyntaxTree& np) {
    if (np.is_leaf()) return *np.entity;
    switch (rule(np)) {
      case RuleId::AdjectivePre: return entity(slot(np, 1));
      case RuleId::Relative: return entity(slot(np, 0));
      default: break;
    }
    throw Error(ErrorCode::ValidationFailure, "NP phrase without a head noun");
  }

  void prelude(const SyntaxTree& node, std::vector<DiagramBox>& relatives,
               std::vector<DiagramBox>& adjectives) {
    if (node.is_leaf()) return;
    const RuleId r = rule(node);
    if (r == RuleId::AdjectivePre) {
      const SyntaxTree& head = slot(node, 1);
      prelude(head, relatives, adjectives);
      adjectives.push_back({BoxKind::Adjective, *slot(node, 0).word, {entity(head)}, {}});
      return;
    }
    if (r == RuleId::Relative) {
      prelude(slot(node, 0), relatives, adjectives);
      auto clause = sentence(slot(node, 1));
      relatives.insert(relatives.end(), std::make_move_iterator(clause.begin()),
                       std::make_move_iterator(clause.end()));
      return;
    }
    for (std::size_t i : canonical_child_order(node, table_)) {
      prelude(node.children[i], relatives, adjectives);
    }
  }

  std::vector<DiagramBox> main_of(const SyntaxTree& s) {
    switch (rule(s)) {
      case RuleId::IntransVerb:
        return single(verb_phrase(slot(s, 1), entity(slot(s, 0))));
      case RuleId::TransVerb:
        return single(transitive(slot(s, 1), entity(slot(s, 0)), entity(slot(s, 2))));
      case RuleId::AdjectivePost: {
        const int subject = entity(slot(s, 0));
        return {DiagramBox{BoxKind::Adjective, *slot(s, 2).word, {subject}, {}},
                DiagramBox{BoxKind::Copula, *slot(s, 1).word, {subject}, {}}};
      }
      case RuleId::Conjunction: {
        auto left = inner_diagram(main_of(slot(s, 0)));
        auto right = inner_diagram(main_of(slot(s, 2)));
        DiagramBox box{BoxKind::ConjBox, *slot(s, 1).word, {}, {}};
        for (const auto& w : left.wires) box.wires.push_back(w.id);
        for (const auto& w : right.wires) append_unique(box.wires, {w.id});
        box.inner.push_back(std::move(left));
        box.inner.push_back(std::move(right));
        return single(std::move(box));
      }
      default: break;
    }
    throw Error(ErrorCode::ValidationFailure, "S node with a non-sentence rule");
  }

  DiagramBox verb_phrase(const SyntaxTree& ivp, int subject) {
    if (ivp.is_leaf()) return {BoxKind::IvGate, *ivp.word, {subject}, {}};
    switch (rule(ivp)) {
      case RuleId::AdverbIV: {
        auto body = inner_diagram(single(verb_phrase(slot(ivp, 1), subject)));
        DiagramBox box{BoxKind::AdverbBox, *slot(ivp, 0).word, {}, {}};
        for (const auto& w : body.wires) box.wires.push_back(w.id);
        box.inner.push_back(std::move(body));
        return box;
      }
      case RuleId::AdpositionIV: {
        auto body = inner_diagram(single(verb_phrase(slot(ivp, 0), subject)));
        DiagramBox box{BoxKind::AdpositionBox, *slot(ivp, 1).word, {}, {}};
        for (const auto& w : body.wires) box.wires.push_back(w.id);
        box.wires.push_back(entity(slot(ivp, 2)));
        require_distinct(box.wires, "adposition '" + box.label + "'");
        box.inner.push_back(std::move(body));
        return box;
      }
      case RuleId::SentCompVerb: {
        auto body = inner_diagram(main_of(slot(ivp, 1)));
        DiagramBox box{BoxKind::ScopeBox, *slot(ivp, 0).word, {subject}, {}};
        for (const auto& w : body.wires) box.wires.push_back(w.id);
        require_distinct(box.wires, "sentential complement '" + box.label + "'");
        box.inner.push_back(std::move(body));
        return box;
      }
      default: break;
    }
    throw Error(ErrorCode::ValidationFailure, "IVP node with a non-IVP rule");
  }

  DiagramBox transitive(const SyntaxTree& tvp, int subject, int object) {
    if (tvp.is_leaf()) {
      DiagramBox gate{BoxKind::TvGate, *tvp.word, {subject, object}, {}};
      require_distinct(gate.wires, "transitive verb '" + gate.label + "'");
      return gate;
    }
    auto body = inner_diagram(single(transitive(slot(tvp, 1), subject, object)));
    DiagramBox box{BoxKind::AdverbBox, *slot(tvp, 0).word, {}, {}};
    for (const auto& w : body.wires) box.wires.push_back(w.id);
    box.inner.push_back(std::move(body));
    return box;
  }

  const GeneratorTable& table_;
};

inline void fill_nouns(TextDiagram& d, const std::map<int, DiagramWire>& wires) {
  for (auto& w : d.wires) {
    auto it = wires.find(w.id);
    if (it != wires.end()) w = it->second;
  }
  for (auto& b : d.boxes) {
    for (auto& inner : b.inner) fill_nouns(inner, wires);
  }
}

}  // namespace detail

/**
 * Diagram fragment of one sentence. Wires are the sentence's entities in
 * canonical first-mention order; a wire whose every occurrence is listed in
 * `anaphors` is dashed and takes its noun from the first anaphor's word.
 */
namespace detail {

inline TextDiagram build_fragment(const SyntaxTree& tree, const GeneratorTable& table,
                                  const std::set<TreePath>& anaphors) {
  TextDiagram d;
  std::map<int, DiagramWire> wires;
  std::vector<int> order;
  visit_canonical(tree, table, [&](const SyntaxTree& node, const TreePath& path) {
    if (!node.is_leaf() || node.label != Symbol::NP) return;
    const bool anaphoric = anaphors.count(path) > 0;
    auto [it, fresh] = wires.emplace(*node.entity, DiagramWire{*node.entity, *node.word, anaphoric});
    if (fresh) {
      order.push_back(*node.entity);
    } else if (it->second.dashed && !anaphoric) {
      it->second.noun = *node.word;
      it->second.dashed = false;
    }
  });
  for (int id : order) d.wires.push_back(wires.at(id));
  d.boxes = FragmentBuilder(table).sentence(tree);
  fill_nouns(d, wires);
  return d;
}

}  // namespace detail

inline TextDiagram tree_to_fragment(const SyntaxTree& tree, const GeneratorTable& table,
                                    const std::set<TreePath>& anaphors = {}) {
  require_valid(tree, table);
  return detail::build_fragment(tree, table, anaphors);
}

/// One fragment per sentence; each cross-sentence link becomes a dangling
/// link on the anaphor's fragment.
inline std::vector<TextDiagram> text_to_fragments(const HybridText& input) {
  const auto& table = GeneratorTable::for_language(input.language);
  require_valid_text(input, table);
  // without links the classes are exactly the shared indices
  std::optional<HybridText> unified;
  if (!input.links.empty()) unified = unify_entities(input);
  const HybridText& text = unified ? *unified : input;
  std::vector<std::set<TreePath>> anaphors(text.sentences.size());
  for (const auto& link : text.links) anaphors[link.anaphor.sentence].insert(link.anaphor.path);
  std::vector<TextDiagram> out;
  for (std::size_t s = 0; s < text.sentences.size(); ++s) {
    out.push_back(detail::build_fragment(text.sentences[s], table, anaphors[s]));
  }
  for (const auto& link : text.links) {
    if (link.referent.sentence == link.anaphor.sentence) continue;
    out[link.anaphor.sentence].dangling_links.push_back(
        {link.referent.sentence, *resolve(text, link.referent)->entity,
         link.anaphor.sentence, *resolve(text, link.anaphor)->entity});
  }
  return out;
}

/**
 * Glues fragments left to right: boxes run in sequence along shared noun
 * wires and side by side otherwise. Every dashed wire must be claimed by a
 * dangling link from an earlier fragment carrying the same entity.
 */
inline TextDiagram compose(std::vector<TextDiagram> fragments) {
  auto has_wire = [](const TextDiagram& d, int id) {
    return std::any_of(d.wires.begin(), d.wires.end(),
                       [&](const DiagramWire& w) { return w.id == id; });
  };
  std::set<std::pair<std::size_t, int>> resolved;
  for (std::size_t f = 0; f < fragments.size(); ++f) {
    for (const auto& link : fragments[f].dangling_links) {
      if (link.anaphor_fragment != f || link.referent_fragment >= f ||
          !has_wire(fragments[link.referent_fragment], link.referent_wire) ||
          !has_wire(fragments[f], link.anaphor_wire)) {
        throw Error(ErrorCode::DanglingLink,
                    "link into fragment " + std::to_string(f) +
                        " does not join an earlier fragment's wire to one of its own");
      }
      if (link.referent_wire != link.anaphor_wire) {
        throw Error(ErrorCode::EntityMismatch,
                    "link joins entity " + std::to_string(link.referent_wire) + " to entity " +
                        std::to_string(link.anaphor_wire));
      }
      resolved.insert({f, link.anaphor_wire});
    }
  }
  TextDiagram out;
  std::map<int, DiagramWire> wires;
  std::vector<int> order;
  for (std::size_t f = 0; f < fragments.size(); ++f) {
    for (const auto& w : fragments[f].wires) {
      if (w.dashed && !resolved.count({f, w.id})) {
        throw Error(ErrorCode::DanglingLink, "dashed wire " + std::to_string(w.id) +
                                                 " in fragment " + std::to_string(f) +
                                                 " has no referent");
      }
      auto [it, fresh] = wires.emplace(w.id, w);
      if (fresh) {
        order.push_back(w.id);
      } else if (!w.dashed) {
        if (it->second.dashed) {
          it->second = w;
        } else if (it->second.noun != w.noun) {
          throw Error(ErrorCode::EntityMismatch, "entity " + std::to_string(w.id) +
                                                     " is both '" + it->second.noun +
                                                     "' and '" + w.noun + "'");
        }
      }
    }
    out.boxes.insert(out.boxes.end(), std::make_move_iterator(fragments[f].boxes.begin()),
                     std::make_move_iterator(fragments[f].boxes.end()));
  }
  for (int id : order) {
    if (wires.at(id).dashed) {
      throw Error(ErrorCode::DanglingLink,
                  "entity " + std::to_string(id) + " is never named outside pronouns");
    }
    out.wires.push_back(wires.at(id));
  }
  detail::fill_nouns(out, wires);
  return out;
}

inline std::size_t count_copulas(const TextDiagram& d) {
  std::size_t n = 0;
  for (const auto& b : d.boxes) {
    if (b.kind == BoxKind::Copula) ++n;
    for (const auto& inner : b.inner) n += count_copulas(inner);
  }
  return n;
}

/// Rewrites each adjective-then-copula pair on one wire to the bare
/// adjective gate, at every nesting level. Pairs never share a box, so the
/// rewrite is confluent; a copula with no adjective before it is left alone.
inline TextDiagram reduce_copula(TextDiagram d) {
  std::vector<DiagramBox> kept;
  kept.reserve(d.boxes.size());
  for (auto& b : d.boxes) {
    for (auto& inner : b.inner) inner = reduce_copula(std::move(inner));
    if (b.kind == BoxKind::Copula && b.wires.size() == 1) {
      auto prev = std::find_if(kept.rbegin(), kept.rend(), [&](const DiagramBox& k) {
        return std::find(k.wires.begin(), k.wires.end(), b.wires[0]) != k.wires.end();
      });
      if (prev != kept.rend() && prev->kind == BoxKind::Adjective) continue;
    }
    kept.push_back(std::move(b));
  }
  d.boxes = std::move(kept);
  return d;
}

}  // namespace textcirc
