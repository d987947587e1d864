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
 * @file circuit.hpp
 *
 * Text circuits: noun wires plus a list of elements. The list is one linear
 * extension of the element partial order; two elements are ordered exactly
 * when they share a wire (transitively).
 *
 * Gates (adjective, intransitive, transitive) have no body. Modifier boxes
 * (adverb, adposition, sentential complement) own one body and conjunction
 * boxes two. A body is an element list acting only on the box's wires.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "textcirc/error.hpp"
#include "textcirc/grammar.hpp"

namespace textcirc {

/// Declaration order is the canonical tie-breaking rank.
enum class ElementKind {
  Adjective,
  IntransitiveVerb,
  TransitiveVerb,
  Adverb,
  Adposition,
  SententialComplement,
  Conjunction,
};

inline constexpr ElementKind kAllElementKinds[] = {
    ElementKind::Adjective,  ElementKind::IntransitiveVerb,     ElementKind::TransitiveVerb,
    ElementKind::Adverb,     ElementKind::Adposition,           ElementKind::SententialComplement,
    ElementKind::Conjunction};

inline std::string_view to_string(ElementKind k) {
  switch (k) {
    case ElementKind::Adjective: return "adjective";
    case ElementKind::IntransitiveVerb: return "intransitive";
    case ElementKind::TransitiveVerb: return "transitive";
    case ElementKind::Adverb: return "adverb";
    case ElementKind::Adposition: return "adposition";
    case ElementKind::SententialComplement: return "sentential_complement";
    case ElementKind::Conjunction: return "conjunction";
  }
  return "?";
}

inline std::optional<ElementKind> element_kind_from_string(std::string_view text) {
  for (auto k : kAllElementKinds) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

inline int kind_rank(ElementKind k) { return static_cast<int>(k); }

inline bool is_gate(ElementKind k) {
  return k == ElementKind::Adjective || k == ElementKind::IntransitiveVerb ||
         k == ElementKind::TransitiveVerb;
}

inline std::size_t body_count(ElementKind k) {
  if (is_gate(k)) return 0;
  return k == ElementKind::Conjunction ? 2 : 1;
}

/// Lexical category of an element's label.
inline Symbol label_category(ElementKind k) {
  switch (k) {
    case ElementKind::Adjective: return Symbol::ADJ;
    case ElementKind::IntransitiveVerb: return Symbol::IVP;
    case ElementKind::TransitiveVerb: return Symbol::TVP;
    case ElementKind::Adverb: return Symbol::ADV;
    case ElementKind::Adposition: return Symbol::ADP;
    case ElementKind::SententialComplement: return Symbol::SCV;
    case ElementKind::Conjunction: return Symbol::CNJ;
  }
  return Symbol::S;
}

struct Element;
using Body = std::vector<Element>;

struct Element {
  ElementKind kind = ElementKind::IntransitiveVerb;
  std::string label;
  std::vector<int> wires;
  std::vector<Body> bodies;

  static Element gate(ElementKind kind, std::string label, std::vector<int> wires) {
    return {kind, std::move(label), std::move(wires), {}};
  }
  static Element adjective(std::string label, int wire) {
    return gate(ElementKind::Adjective, std::move(label), {wire});
  }
  static Element intransitive(std::string label, int wire) {
    return gate(ElementKind::IntransitiveVerb, std::move(label), {wire});
  }
  static Element transitive(std::string label, int subject, int object) {
    return gate(ElementKind::TransitiveVerb, std::move(label), {subject, object});
  }
  static Element adverb(std::string label, Body body);
  static Element adposition(std::string label, Body body, int object);
  static Element complement(std::string label, int subject, Body body);
  static Element conjunction(std::string label, Body left, Body right);

  friend bool operator==(const Element&, const Element&) = default;
};

struct CircuitWire {
  int id = 0;
  std::string noun;

  friend bool operator==(const CircuitWire&, const CircuitWire&) = default;
};

struct TextCircuit {
  std::vector<CircuitWire> wires;
  std::vector<Element> elements;

  std::optional<std::size_t> position_of(int id) const {
    for (std::size_t i = 0; i < wires.size(); ++i) {
      if (wires[i].id == id) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const TextCircuit&, const TextCircuit&) = default;
};

/// Wires touched by a body, in order of first appearance.
inline std::vector<int> body_wires(const Body& body) {
  std::vector<int> out;
  for (const auto& e : body) {
    for (int w : e.wires) {
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
  }
  return out;
}

inline Element Element::adverb(std::string label, Body body) {
  auto wires = body_wires(body);
  return {ElementKind::Adverb, std::move(label), std::move(wires), {std::move(body)}};
}

inline Element Element::adposition(std::string label, Body body, int object) {
  auto wires = body_wires(body);
  wires.push_back(object);
  return {ElementKind::Adposition, std::move(label), std::move(wires), {std::move(body)}};
}

inline Element Element::complement(std::string label, int subject, Body body) {
  std::vector<int> wires{subject};
  for (int w : body_wires(body)) wires.push_back(w);
  return {ElementKind::SententialComplement, std::move(label), std::move(wires),
          {std::move(body)}};
}

inline Element Element::conjunction(std::string label, Body left, Body right) {
  auto wires = body_wires(left);
  for (int w : body_wires(right)) {
    if (std::find(wires.begin(), wires.end(), w) == wires.end()) wires.push_back(w);
  }
  return {ElementKind::Conjunction, std::move(label), std::move(wires),
          {std::move(left), std::move(right)}};
}

/// The wire list a box must carry given its bodies.
inline std::vector<int> expected_box_wires(const Element& e) {
  switch (e.kind) {
    case ElementKind::Adverb: return body_wires(e.bodies[0]);
    case ElementKind::Adposition: {
      auto w = body_wires(e.bodies[0]);
      if (!e.wires.empty()) w.push_back(e.wires.back());
      return w;
    }
    case ElementKind::SententialComplement: {
      std::vector<int> w;
      if (!e.wires.empty()) w.push_back(e.wires.front());
      for (int x : body_wires(e.bodies[0])) w.push_back(x);
      return w;
    }
    case ElementKind::Conjunction: {
      auto w = body_wires(e.bodies[0]);
      for (int x : body_wires(e.bodies[1])) {
        if (std::find(w.begin(), w.end(), x) == w.end()) w.push_back(x);
      }
      return w;
    }
    default: break;
  }
  return e.wires;
}

namespace detail {

/// `where` holds the element's index at each nesting level.
inline void check_element(const Element& e, const std::vector<int>& scope,
                          std::vector<std::size_t>& where) {
  auto fail = [&](const std::string& msg) {
    std::string at = "element";
    for (std::size_t i = 0; i < where.size(); ++i) at += (i ? "." : " ") + std::to_string(where[i]);
    throw Error(ErrorCode::ArityViolation,
                at + " " + std::string(to_string(e.kind)) + " '" + e.label + "': " + msg);
  };
  for (std::size_t i = 0; i < e.wires.size(); ++i) {
    if (std::find(e.wires.begin(), e.wires.begin() + static_cast<std::ptrdiff_t>(i),
                  e.wires[i]) != e.wires.begin() + static_cast<std::ptrdiff_t>(i)) {
      fail("repeats a wire");
    }
    if (std::find(scope.begin(), scope.end(), e.wires[i]) == scope.end()) {
      fail("touches wire " + std::to_string(e.wires[i]) + " outside its scope");
    }
  }
  if (e.bodies.size() != body_count(e.kind)) fail("wrong number of bodies");
  switch (e.kind) {
    case ElementKind::Adjective:
    case ElementKind::IntransitiveVerb:
      if (e.wires.size() != 1) fail("arity must be 1");
      return;
    case ElementKind::TransitiveVerb:
      if (e.wires.size() != 2) fail("arity must be 2");
      return;
    default: break;
  }
  for (const auto& body : e.bodies) {
    if (body.empty()) fail("empty body");
  }
  if (expected_box_wires(e) != e.wires) fail("wire list does not match its body");
  for (const auto& body : e.bodies) {
    for (std::size_t i = 0; i < body.size(); ++i) {
      where.push_back(i);
      check_element(body[i], e.wires, where);
      where.pop_back();
    }
  }
}

}  // namespace detail

/// Throws ArityViolation on the first broken invariant.
inline void check_well_formed(const TextCircuit& c) {
  std::vector<int> ids;
  for (const auto& w : c.wires) {
    if (std::find(ids.begin(), ids.end(), w.id) != ids.end()) {
      throw Error(ErrorCode::ArityViolation, "wire id " + std::to_string(w.id) + " repeats");
    }
    ids.push_back(w.id);
  }
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    where.assign(1, i);
    detail::check_element(c.elements[i], ids, where);
  }
}

/// Number of elements at every nesting level.
inline std::size_t total_elements(const Body& body) {
  std::size_t n = 0;
  for (const auto& e : body) {
    ++n;
    for (const auto& b : e.bodies) n += total_elements(b);
  }
  return n;
}

}  // namespace textcirc
