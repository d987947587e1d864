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

#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "textcirc/error.hpp"

namespace textcirc::detail {

/// Character cursor with 1-based line/column tracking, shared by the
/// bracketed-tree and circuit parsers.
class Scanner {
 public:
  explicit Scanner(std::string_view src, std::size_t first_line = 1)
      : src_(src), line_(first_line) {}

  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return eof() ? '\0' : src_[pos_]; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

  char get() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& message) const {
    throw Error(code, message, line_, col_);
  }

  void expect(char c) {
    skip_space();
    if (eof()) fail(ErrorCode::FormatError, std::string("expected '") + c + "', found end of input");
    if (peek() != c) {
      fail(ErrorCode::FormatError, std::string("expected '") + c + "', found '" + peek() + "'");
    }
    get();
  }

  /// Reads a double-quoted string; backslash escapes the next character.
  std::string quoted() {
    const std::size_t l = line_, c = col_;
    get();  // opening quote
    std::string out;
    while (true) {
      if (eof()) throw Error(ErrorCode::LexError, "unterminated string", l, c);
      char ch = get();
      if (ch == '"') break;
      if (ch == '\\') {
        if (eof()) throw Error(ErrorCode::LexError, "unterminated string", l, c);
        ch = get();
      }
      out += ch;
    }
    return out;
  }

  template <typename Pred>
  std::string take_while(Pred pred) {
    std::string out;
    while (!eof() && pred(peek())) out += get();
    return out;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_ = 1;
};

/// Quotes `word` when it would not survive as a bare token.
inline std::string quote_if_needed(const std::string& word, bool always = false) {
  bool bare = !word.empty() && !always;
  for (char c : word) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' ||
        c == '\\' || c == '#' || c == '[' || c == ']' || c == ',') {
      bare = false;
    }
  }
  if (bare) return word;
  std::string out = "\"";
  for (char c : word) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace textcirc::detail
