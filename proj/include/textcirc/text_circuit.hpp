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
 * @file text_circuit.hpp
 *
 * Lowering from text diagrams to circuits, the end-to-end compiler, and
 * circuit equality.
 *
 * Equality is byte equality of canonical forms. The canonical form picks one
 * linear extension of the element order greedily: among elements whose
 * predecessors are already placed, take the one with the smallest
 * (earliest wire position, kind rank, label, ...) key. Wire positions are
 * handed out in order of first use as elements are placed, so the form is
 * independent of both the element list order and the wire numbering.
 */
#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "textcirc/circuit.hpp"
#include "textcirc/circuit_io.hpp"
#include "textcirc/error.hpp"
#include "textcirc/hybrid.hpp"
#include "textcirc/lexicon.hpp"
#include "textcirc/text_diagram.hpp"

namespace textcirc {

namespace detail {

inline Body boxes_to_body(const std::vector<DiagramBox>& boxes) {
  Body out;
  for (const auto& b : boxes) {
    Element e;
    e.label = b.label;
    e.wires = b.wires;
    switch (b.kind) {
      case BoxKind::Adjective: e.kind = ElementKind::Adjective; break;
      case BoxKind::IvGate: e.kind = ElementKind::IntransitiveVerb; break;
      case BoxKind::TvGate: e.kind = ElementKind::TransitiveVerb; break;
      case BoxKind::AdverbBox: e.kind = ElementKind::Adverb; break;
      case BoxKind::AdpositionBox: e.kind = ElementKind::Adposition; break;
      case BoxKind::ScopeBox: e.kind = ElementKind::SententialComplement; break;
      case BoxKind::ConjBox: e.kind = ElementKind::Conjunction; break;
      case BoxKind::Copula:
        throw Error(ErrorCode::UnreducedCopula,
                    "copula '" + b.label + "' without an adjective to absorb it");
    }
    for (const auto& inner : b.inner) {
      if (!inner.dangling_links.empty()) {
        throw Error(ErrorCode::DanglingLink, "dashed wire inside a box");
      }
      e.bodies.push_back(boxes_to_body(inner.boxes));
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace detail

inline TextCircuit diagram_to_circuit(const TextDiagram& diagram) {
  if (!diagram.dangling_links.empty()) {
    throw Error(ErrorCode::DanglingLink, "diagram still has uncomposed pronominal links");
  }
  TextCircuit c;
  for (const auto& w : diagram.wires) {
    if (w.dashed) {
      throw Error(ErrorCode::DanglingLink, "wire " + std::to_string(w.id) + " is still dashed");
    }
    c.wires.push_back({w.id, w.noun});
  }
  c.elements = detail::boxes_to_body(diagram.boxes);
  check_well_formed(c);
  return c;
}

/// Text diagram of a whole text: fragments composed along links, copulas
/// reduced.
inline TextDiagram text_to_diagram(const HybridText& text) {
  return reduce_copula(compose(text_to_fragments(text)));
}

inline TextCircuit compile_text(const HybridText& text) {
  return diagram_to_circuit(text_to_diagram(text));
}

inline TextCircuit compile_tree(const SyntaxTree& tree, Language lang) {
  return compile_text(HybridText{lang, {tree}, {}});
}

/**
 * Kahn's algorithm where `pick(ready)` chooses which ready node goes next
 * (it returns an index into `ready`, which is kept sorted). Throws
 * CycleDetected when the edges are not acyclic.
 */
template <typename Pick>
std::vector<std::size_t> linear_extension(std::size_t n,
                                          std::span<const std::pair<std::size_t, std::size_t>> edges,
                                          Pick&& pick) {
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [from, to] : edges) {
    succ.at(from).push_back(to);
    ++indegree.at(to);
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::vector<std::size_t> out;
  out.reserve(n);
  while (!ready.empty()) {
    const std::size_t k = pick(std::as_const(ready));
    const std::size_t node = ready.at(k);
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(node);
    for (std::size_t s : succ[node]) {
      if (--indegree[s] == 0) ready.insert(std::upper_bound(ready.begin(), ready.end(), s), s);
    }
  }
  if (out.size() != n) {
    throw Error(ErrorCode::CycleDetected,
                std::to_string(n - out.size()) + " elements sit on a precedence cycle");
  }
  return out;
}

/// Consecutive elements on each wire: the generating edges of the order.
inline std::vector<std::pair<std::size_t, std::size_t>> wire_precedence(const Body& body) {
  std::map<int, std::size_t> last;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < body.size(); ++i) {
    for (int w : body[i].wires) {
      auto it = last.find(w);
      if (it != last.end()) edges.emplace_back(it->second, i);
      last[w] = i;
    }
  }
  return edges;
}

namespace detail {

class Canonicalizer {
 public:
  explicit Canonicalizer(const TextCircuit& c) {
    for (std::size_t i = 0; i < c.wires.size(); ++i) {
      nouns_[c.wires[i].id] = c.wires[i].noun;
      original_[c.wires[i].id] = i;
    }
  }

  TextCircuit run(const TextCircuit& c) {
    TextCircuit out;
    out.elements = body(c.elements);
    std::vector<std::pair<int, int>> placed(position_.begin(), position_.end());
    std::vector<CircuitWire> wires(placed.size());
    for (auto [id, pos] : placed) wires[static_cast<std::size_t>(pos)] = {pos, nouns_.at(id)};
    for (const auto& w : c.wires) {
      if (!position_.count(w.id)) wires.push_back({next_++, w.noun});
    }
    out.wires = std::move(wires);
    return out;
  }

 private:
  struct Key {
    int first_position;
    int rank;
    std::string label;
    std::string serial;
    std::vector<std::string> fresh_nouns;
    std::vector<std::size_t> original;

    auto tie() const {
      return std::tie(first_position, rank, label, serial, fresh_nouns, original);
    }
    bool operator<(const Key& o) const { return tie() < o.tie(); }
  };

  /// Leading part of the key, compared without allocating.
  struct Head {
    int first_position;
    int rank;
    const std::string* label;

    bool operator<(const Head& o) const {
      if (first_position != o.first_position) return first_position < o.first_position;
      if (rank != o.rank) return rank < o.rank;
      return *label < *o.label;
    }
  };

  Head head(const Element& e) const {
    Head h{INT_MAX, kind_rank(e.kind), &e.label};
    for (int w : e.wires) {
      auto it = position_.find(w);
      if (it != position_.end()) h.first_position = std::min(h.first_position, it->second);
    }
    return h;
  }

  /// Key without `serial`, which only matters among ties; see complete().
  Key key(const Element& e) const {
    Key k{INT_MAX, kind_rank(e.kind), e.label, {}, {}, {}};
    for (int w : e.wires) {
      auto it = position_.find(w);
      if (it != position_.end()) {
        k.first_position = std::min(k.first_position, it->second);
      } else {
        k.fresh_nouns.push_back(nouns_.at(w));
      }
      k.original.push_back(original_.at(w));
    }
    return k;
  }

  void complete(Key& k, const Element& e) const {
    Canonicalizer trial = *this;
    k.serial = serialize_element(trial.place(e));
  }

  Element place(const Element& e) {
    for (int w : e.wires) {
      if (!position_.count(w)) position_[w] = next_++;
    }
    Element out;
    out.kind = e.kind;
    out.label = e.label;
    for (int w : e.wires) out.wires.push_back(position_.at(w));
    for (const auto& b : e.bodies) out.bodies.push_back(body(b));
    return out;
  }

  Body body(const Body& in) {
    const auto edges = wire_precedence(in);
    Body out;
    linear_extension(in.size(), edges, [&](const std::vector<std::size_t>& ready) {
      std::vector<Head> heads;
      heads.reserve(ready.size());
      for (std::size_t r : ready) heads.push_back(head(in[r]));
      std::size_t best = 0;
      for (std::size_t r = 1; r < heads.size(); ++r) {
        if (heads[r] < heads[best]) best = r;
      }
      std::vector<std::size_t> tied;
      for (std::size_t r = 0; r < heads.size(); ++r) {
        if (!(heads[best] < heads[r])) tied.push_back(r);
      }
      if (tied.size() > 1) {
        std::vector<Key> keys;
        for (std::size_t r : tied) {
          keys.push_back(key(in[ready[r]]));
          complete(keys.back(), in[ready[r]]);
        }
        std::size_t k = 0;
        for (std::size_t i = 1; i < keys.size(); ++i) {
          if (keys[i] < keys[k]) k = i;
        }
        best = tied[k];
      }
      out.push_back(place(in[ready[best]]));
      return best;
    });
    return out;
  }

  std::map<int, std::string> nouns_;
  std::map<int, std::size_t> original_;
  std::map<int, int> position_;
  int next_ = 0;
};

}  // namespace detail

/// The circuit rewritten into canonical element order with wires numbered
/// 0, 1, ... by first use.
inline TextCircuit canonical_circuit(const TextCircuit& c) {
  check_well_formed(c);
  return detail::Canonicalizer(c).run(c);
}

/// Canonical serialization; equal strings mean equal circuits.
inline std::string canonicalize(const TextCircuit& c) {
  return serialize_circuit(canonical_circuit(c));
}

namespace detail {

inline Body map_body(const Body& body, const Lexicon& lex, Direction dir) {
  Body out;
  for (const auto& e : body) {
    Element m = e;
    m.label = lex.translate(e.label, label_category(e.kind), dir);
    m.bodies.clear();
    for (const auto& b : e.bodies) m.bodies.push_back(map_body(b, lex, dir));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

/// Translates every gate label and wire noun through the lexicon.
inline TextCircuit map_labels(const TextCircuit& c, const Lexicon& lex, Direction dir) {
  TextCircuit out;
  for (const auto& w : c.wires) out.wires.push_back({w.id, lex.translate(w.noun, Symbol::NP, dir)});
  out.elements = detail::map_body(c.elements, lex, dir);
  return out;
}

/// `a` is read in the source language of `dir`, `b` in the target.
inline bool equal_up_to_dictionary(const TextCircuit& a, const TextCircuit& b, const Lexicon& lex,
                                   Direction dir = Direction::EnglishToUrdu) {
  return canonicalize(map_labels(a, lex, dir)) == canonicalize(b);
}

}  // namespace textcirc
