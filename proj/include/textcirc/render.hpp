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
 * @file render.hpp
 *
 * Graphviz and plain-text pictures of circuits. Both draw the canonical
 * form, so equal circuits render byte-identically.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "textcirc/circuit.hpp"
#include "textcirc/scanner.hpp"
#include "textcirc/text_circuit.hpp"

namespace textcirc {

namespace detail {

inline std::string dot_quote(const std::string& s) { return quote_if_needed(s, true); }

class DotWriter {
 public:
  explicit DotWriter(const TextCircuit& c) : circuit_(c) {}

  std::string run() {
    if (circuit_.wires.empty() && circuit_.elements.empty()) return "digraph circuit {\n}\n";
    out_ += "digraph circuit {\n  rankdir=TB;\n  node [fontname=\"Helvetica\"];\n";
    out_ += "  { rank=same;";
    for (const auto& w : circuit_.wires) out_ += " w" + std::to_string(w.id) + "_in;";
    out_ += " }\n";
    for (const auto& w : circuit_.wires) {
      const std::string id = "w" + std::to_string(w.id);
      out_ += "  " + id + "_in [shape=plaintext, label=" + dot_quote(w.noun) + "];\n";
      out_ += "  " + id + "_out [shape=point];\n";
      tail_[w.id] = id + "_in";
    }
    body(circuit_.elements, "  ");
    for (const auto& w : circuit_.wires) edge(w.id, "w" + std::to_string(w.id) + "_out");
    out_ += edges_;
    out_ += "}\n";
    return out_;
  }

 private:
  void edge(int wire, const std::string& to) {
    const auto& noun = circuit_.wires[*circuit_.position_of(wire)].noun;
    edges_ += "  " + tail_.at(wire) + " -> " + to + " [label=" + dot_quote(noun) + "];\n";
    tail_[wire] = to;
  }

  void body(const Body& elements, const std::string& indent) {
    for (const auto& e : elements) element(e, indent);
  }

  void element(const Element& e, const std::string& indent) {
    const std::string id = "e" + std::to_string(next_++);
    const std::string label = dot_quote(e.label + " (" + std::string(to_string(e.kind)) + ")");
    if (is_gate(e.kind)) {
      out_ += indent + id + " [shape=box, label=" + label + "];\n";
      for (int w : e.wires) edge(w, id);
      return;
    }
    out_ += indent + "subgraph cluster_" + id + " {\n";
    out_ += indent + "  style=rounded;\n";
    out_ += indent + "  " + id + " [shape=box, style=dashed, label=" + label + "];\n";
    for (int w : e.wires) edge(w, id);
    for (std::size_t b = 0; b < e.bodies.size(); ++b) {
      if (e.bodies.size() > 1) {
        out_ += indent + "  subgraph cluster_" + id + "_" + std::to_string(b) + " {\n";
        body(e.bodies[b], indent + "    ");
        out_ += indent + "  }\n";
      } else {
        body(e.bodies[b], indent + "  ");
      }
    }
    out_ += indent + "}\n";
  }

  const TextCircuit& circuit_;
  std::string out_;
  std::string edges_;
  std::map<int, std::string> tail_;
  int next_ = 0;
};

inline void ascii_rows(const Body& body, const std::vector<int>& columns, std::size_t depth,
                       bool color, std::string& out) {
  for (const auto& e : body) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const bool on = std::find(e.wires.begin(), e.wires.end(), columns[i]) != e.wires.end();
      if (i) out += ' ';
      out += on ? (is_gate(e.kind) ? '*' : '+') : '|';
    }
    out += "  " + std::string(2 * depth, ' ');
    std::string label = quote_if_needed(e.label, true);
    if (color) label = (is_gate(e.kind) ? "\x1b[1;32m" : "\x1b[1;34m") + label + "\x1b[0m";
    out += std::string(to_string(e.kind)) + " " + label + "\n";
    for (std::size_t b = 0; b < e.bodies.size(); ++b) {
      ascii_rows(e.bodies[b], columns, depth + 1, color, out);
    }
  }
}

}  // namespace detail

/// Graphviz digraph: one column of edges per wire, a box node per gate and
/// a cluster per box.
inline std::string render_dot(const TextCircuit& circuit) {
  return detail::DotWriter(canonical_circuit(circuit)).run();
}

/**
 * One row per element, nested rows indented. Each wire is a column showing
 * '*' where a gate acts on it, '+' for a box and '|' otherwise.
 */
inline std::string render_ascii(const TextCircuit& circuit, bool color = false) {
  const TextCircuit c = canonical_circuit(circuit);
  if (c.wires.empty() && c.elements.empty()) return "";
  std::string out;
  std::vector<int> columns;
  for (std::size_t i = 0; i < c.wires.size(); ++i) {
    columns.push_back(c.wires[i].id);
    out += std::to_string(i) + " = " + c.wires[i].noun + "\n";
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(i % 10);
  }
  out += "\n";
  detail::ascii_rows(c.elements, columns, 0, color, out);
  return out;
}

}  // namespace textcirc
