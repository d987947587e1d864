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
 * @file circuit_io.hpp
 *
 * Circuit exchange format:
 *
 *     wires: [(1, "John"), (2, "books")]
 *     elements: [transitive "reads" (1, 2)]
 *
 * An element is `kind "label" (wire, ...)` followed by one bracketed body
 * per box body, e.g. `adverb "quickly" (1) [intransitive "runs" (1)]`.
 * Whitespace between tokens is free on input; serialization always emits
 * the exact spacing above.
 */
#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "textcirc/circuit.hpp"
#include "textcirc/error.hpp"
#include "textcirc/scanner.hpp"

namespace textcirc {

namespace detail {

inline void serialize_body(const Body& body, std::string& out);

inline void serialize_element(const Element& e, std::string& out) {
  out += to_string(e.kind);
  out += ' ';
  out += quote_if_needed(e.label, true);
  out += " (";
  for (std::size_t i = 0; i < e.wires.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(e.wires[i]);
  }
  out += ')';
  for (const auto& body : e.bodies) {
    out += ' ';
    serialize_body(body, out);
  }
}

inline void serialize_body(const Body& body, std::string& out) {
  out += '[';
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i) out += ", ";
    serialize_element(body[i], out);
  }
  out += ']';
}

class CircuitParser {
 public:
  explicit CircuitParser(std::string_view src) : in_(src) {}

  TextCircuit parse() {
    TextCircuit c;
    keyword("wires");
    in_.expect(':');
    in_.expect('[');
    in_.skip_space();
    if (in_.peek() != ']') {
      do {
        in_.expect('(');
        CircuitWire w;
        w.id = integer();
        in_.expect(',');
        w.noun = string();
        in_.expect(')');
        c.wires.push_back(std::move(w));
      } while (comma());
    }
    in_.expect(']');
    keyword("elements");
    in_.expect(':');
    c.elements = body();
    in_.skip_space();
    if (!in_.eof()) in_.fail(ErrorCode::FormatError, "trailing input after circuit");
    return c;
  }

 private:
  bool comma() {
    in_.skip_space();
    if (in_.peek() == ',') {
      in_.get();
      return true;
    }
    return false;
  }

  std::string word() {
    in_.skip_space();
    return in_.take_while([](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  void keyword(std::string_view kw) {
    auto w = word();
    if (w != kw) in_.fail(ErrorCode::FormatError, "expected '" + std::string(kw) + "'");
  }

  int integer() {
    in_.skip_space();
    std::string digits;
    if (in_.peek() == '-') digits += in_.get();
    digits += in_.take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digits.empty() || digits == "-") in_.fail(ErrorCode::FormatError, "expected wire id");
    try {
      return std::stoi(digits);
    } catch (const std::out_of_range&) {
      in_.fail(ErrorCode::FormatError, "wire id out of range");
    }
  }

  std::string string() {
    in_.skip_space();
    if (in_.peek() != '"') in_.fail(ErrorCode::FormatError, "expected quoted label");
    return in_.quoted();
  }

  Body body() {
    Body out;
    in_.expect('[');
    in_.skip_space();
    if (in_.peek() != ']') {
      do {
        out.push_back(element());
      } while (comma());
    }
    in_.expect(']');
    return out;
  }

  Element element() {
    in_.skip_space();
    const auto line = in_.line(), col = in_.column();
    auto kind_name = word();
    auto kind = element_kind_from_string(kind_name);
    if (!kind) throw Error(ErrorCode::FormatError, "unknown element kind '" + kind_name + "'", line, col);
    Element e;
    e.kind = *kind;
    e.label = string();
    in_.expect('(');
    in_.skip_space();
    if (in_.peek() != ')') {
      do {
        e.wires.push_back(integer());
      } while (comma());
    }
    in_.expect(')');
    for (std::size_t i = 0; i < body_count(e.kind); ++i) e.bodies.push_back(body());
    return e;
  }

  Scanner in_;
};

}  // namespace detail

inline std::string serialize_element(const Element& e) {
  std::string out;
  detail::serialize_element(e, out);
  return out;
}

/// Two lines, LF terminated.
inline std::string serialize_circuit(const TextCircuit& c) {
  std::string out = "wires: [";
  for (std::size_t i = 0; i < c.wires.size(); ++i) {
    if (i) out += ", ";
    out += "(" + std::to_string(c.wires[i].id) + ", " +
           detail::quote_if_needed(c.wires[i].noun, true) + ")";
  }
  out += "]\nelements: ";
  detail::serialize_body(c.elements, out);
  out += '\n';
  return out;
}

/// Parses and checks well-formedness.
inline TextCircuit parse_circuit(std::string_view text) {
  auto c = detail::CircuitParser(text).parse();
  check_well_formed(c);
  return c;
}

}  // namespace textcirc
