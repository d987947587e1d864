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
 * @file tree_io.hpp
 *
 * Bracketed trees and hybrid-text files.
 *
 *     (S (NP#1 John) (TVP reads) (NP#2 books))
 *     (S (NP#1 John) (NP#2 kitabein) (TVP "parhta hai"))
 *
 * A text file holds one bracketed sentence per line, followed (or
 * interleaved) by link lines
 *
 *     @link referent=0:0 anaphor=1:0 surface=pronoun
 *
 * whose paths are dot-separated surface child indices. Blank lines and lines
 * starting with '#' are ignored.
 */
#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "textcirc/error.hpp"
#include "textcirc/grammar.hpp"
#include "textcirc/hybrid.hpp"
#include "textcirc/scanner.hpp"

namespace textcirc {

namespace detail {

inline bool is_bare_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '"';
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view src, std::size_t first_line = 1) : in_(src, first_line) {}

  SyntaxTree parse() {
    in_.skip_space();
    if (in_.eof()) in_.fail(ErrorCode::UnbalancedParens, "empty input, expected '('");
    if (in_.peek() == ')') in_.fail(ErrorCode::UnbalancedParens, "unexpected ')'");
    if (in_.peek() != '(') in_.fail(ErrorCode::LexError, "expected '('");
    SyntaxTree t = node();
    in_.skip_space();
    if (!in_.eof()) {
      if (in_.peek() == ')') in_.fail(ErrorCode::UnbalancedParens, "unmatched ')'");
      in_.fail(ErrorCode::LexError, "trailing input after tree");
    }
    return t;
  }

 private:
  SyntaxTree node() {
    const auto open_line = in_.line(), open_col = in_.column();
    in_.get();  // '('
    in_.skip_space();
    const auto label_line = in_.line(), label_col = in_.column();
    std::string head = in_.take_while([](char c) { return is_bare_char(c); });
    if (head.empty()) in_.fail(ErrorCode::LexError, "expected a node label");
    SyntaxTree t;
    std::string name = head;
    if (auto hash = head.find('#'); hash != std::string::npos) {
      name = head.substr(0, hash);
      const std::string digits = head.substr(hash + 1);
      bool numeric = !digits.empty() && digits.size() < 9 &&
                     std::all_of(digits.begin(), digits.end(),
                                 [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      if (!numeric || std::stoi(digits) <= 0) {
        throw Error(ErrorCode::BadEntityIndex,
                    "entity index '" + digits + "' must be a positive integer", label_line,
                    label_col);
      }
      t.entity = std::stoi(digits);
    }
    auto sym = symbol_from_string(name);
    if (!sym) throw Error(ErrorCode::LexError, "unknown label '" + name + "'", label_line, label_col);
    t.label = *sym;
    while (true) {
      in_.skip_space();
      if (in_.eof()) {
        throw Error(ErrorCode::UnbalancedParens, "'(' is never closed", open_line, open_col);
      }
      const char c = in_.peek();
      if (c == ')') {
        in_.get();
        break;
      }
      if (c == '(') {
        if (t.word) in_.fail(ErrorCode::LexError, "node mixes a terminal and subtrees");
        t.children.push_back(node());
        continue;
      }
      if (t.word || !t.children.empty()) {
        in_.fail(ErrorCode::LexError, "a node holds either one terminal or subtrees");
      }
      t.word = c == '"' ? in_.quoted() : in_.take_while([](char ch) { return is_bare_char(ch); });
    }
    if (t.entity && (!t.children.empty() || t.label != Symbol::NP)) {
      throw Error(ErrorCode::BadEntityIndex, "entity index on a non-NP-leaf node", label_line,
                  label_col);
    }
    return t;
  }

  Scanner in_;
};

inline void serialize_node(const SyntaxTree& t, std::string& out) {
  out += '(';
  out += to_string(t.label);
  if (t.entity) out += "#" + std::to_string(*t.entity);
  if (t.word) {
    out += ' ';
    out += quote_if_needed(*t.word);
  }
  for (const auto& c : t.children) {
    out += ' ';
    serialize_node(c, out);
  }
  out += ')';
}

inline TreePath parse_path(std::string_view text, std::size_t line, std::size_t col) {
  TreePath out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto dot = text.find('.', start);
    auto piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos
                                                                   : dot - start);
    if (piece.empty() || piece.size() > 6 ||
        !std::all_of(piece.begin(), piece.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(ErrorCode::FormatError, "bad path '" + std::string(text) + "'", line, col);
    }
    out.push_back(static_cast<std::size_t>(std::stoul(std::string(piece))));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

inline NpOccurrence parse_occurrence(std::string_view text, std::size_t line, std::size_t col) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon > 6 ||
      !std::all_of(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(colon),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorCode::FormatError,
                "occurrence '" + std::string(text) + "' is not <sentence>:<path>", line, col);
  }
  return {static_cast<std::size_t>(std::stoul(std::string(text.substr(0, colon)))),
          parse_path(text.substr(colon + 1), line, col)};
}

inline PronominalLink parse_link_line(std::string_view line_text, std::size_t line) {
  std::istringstream fields{std::string(line_text)};
  std::string tag;
  fields >> tag;  // "@link"
  std::optional<NpOccurrence> referent, anaphor;
  std::optional<LinkSurface> surface;
  std::string field;
  while (fields >> field) {
    const std::size_t col = line_text.find(field) + 1;
    auto eq = field.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::FormatError, "expected key=value, found '" + field + "'", line, col);
    }
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "referent") {
      referent = parse_occurrence(value, line, col);
    } else if (key == "anaphor") {
      anaphor = parse_occurrence(value, line, col);
    } else if (key == "surface") {
      surface = link_surface_from_string(value);
      if (!surface) {
        throw Error(ErrorCode::FormatError, "unknown link surface '" + value + "'", line, col);
      }
    } else {
      throw Error(ErrorCode::FormatError, "unknown link field '" + key + "'", line, col);
    }
  }
  if (!referent || !anaphor || !surface) {
    throw Error(ErrorCode::FormatError, "link needs referent=, anaphor= and surface=", line, 1);
  }
  return {*referent, *anaphor, *surface};
}

}  // namespace detail

inline SyntaxTree parse_tree(std::string_view input) { return detail::TreeParser(input).parse(); }

inline std::string serialize_tree(const SyntaxTree& tree) {
  std::string out;
  detail::serialize_node(tree, out);
  return out;
}

/// Parses a text file. Link endpoints are checked to be NP leaves; the rest
/// of text validation happens when the text is compiled.
inline HybridText parse_hybrid_text(std::string_view input, Language lang) {
  HybridText text;
  text.language = lang;
  std::vector<std::size_t> link_lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= input.size()) {
    auto end = input.find('\n', start);
    std::string_view line = input.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                             : end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      std::string_view body = line.substr(first);
      if (body.rfind("@link", 0) == 0) {
        text.links.push_back(detail::parse_link_line(body, line_no));
        link_lines.push_back(line_no);
      } else {
        text.sentences.push_back(detail::TreeParser(line, line_no).parse());
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  for (std::size_t k = 0; k < text.links.size(); ++k) {
    for (const auto* occ : {&text.links[k].referent, &text.links[k].anaphor}) {
      if (resolve(text, *occ) == nullptr) {
        throw Error(ErrorCode::InvalidOccurrence, to_string(*occ) + " is not an NP leaf",
                    link_lines[k], 1);
      }
    }
  }
  return text;
}

inline std::string serialize_hybrid_text(const HybridText& text) {
  std::string out;
  for (const auto& s : text.sentences) out += serialize_tree(s) + "\n";
  for (const auto& l : text.links) {
    out += "@link referent=" + std::to_string(l.referent.sentence) + ":" +
           path_to_string(l.referent.path) + " anaphor=" + std::to_string(l.anaphor.sentence) +
           ":" + path_to_string(l.anaphor.path) + " surface=" + std::string(to_string(l.surface)) +
           "\n";
  }
  return out;
}

}  // namespace textcirc
