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
 * @file lexicon_io.hpp
 *
 * Tab-separated dictionaries: `<english>\t<urdu>\t<category>` per line.
 * Categories: NP, IV, TV, ADJ, ADV, ADP, SCV, CNJ, COPULA. The finer tags
 * ADJ_PRE, ADJ_POST, ADV_IV, ADV_TV and ADP_IV, plus IVP, TVP and COP, are
 * accepted as aliases. '#' starts a comment line.
 */
#pragma once

#include <map>
#include <string>
#include <string_view>

#include "textcirc/error.hpp"
#include "textcirc/grammar.hpp"
#include "textcirc/lexicon.hpp"

namespace textcirc {

inline std::optional<Symbol> lexicon_category_from_string(std::string_view tag) {
  static const std::map<std::string_view, Symbol> kTags{
      {"NP", Symbol::NP},       {"IV", Symbol::IVP},      {"IVP", Symbol::IVP},
      {"TV", Symbol::TVP},      {"TVP", Symbol::TVP},     {"ADJ", Symbol::ADJ},
      {"ADJ_PRE", Symbol::ADJ}, {"ADJ_POST", Symbol::ADJ}, {"ADV", Symbol::ADV},
      {"ADV_IV", Symbol::ADV},  {"ADV_TV", Symbol::ADV},  {"ADP", Symbol::ADP},
      {"ADP_IV", Symbol::ADP},  {"SCV", Symbol::SCV},     {"CNJ", Symbol::CNJ},
      {"COP", Symbol::COP},     {"COPULA", Symbol::COP}};
  auto it = kTags.find(tag);
  if (it == kTags.end()) return std::nullopt;
  return it->second;
}

inline std::string_view lexicon_category_name(Symbol s) {
  switch (s) {
    case Symbol::IVP: return "IV";
    case Symbol::TVP: return "TV";
    case Symbol::COP: return "COPULA";
    default: return to_string(s);
  }
}

inline Lexicon parse_lexicon(std::string_view input) {
  Lexicon lex;
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
      auto t1 = line.find('\t');
      auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
      if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos) {
        throw Error(ErrorCode::FormatError, "expected three tab-separated fields", line_no, 1);
      }
      std::string english(line.substr(0, t1));
      std::string urdu(line.substr(t1 + 1, t2 - t1 - 1));
      std::string_view tag = line.substr(t2 + 1);
      if (english.empty() || urdu.empty()) {
        throw Error(ErrorCode::FormatError, "empty word", line_no, 1);
      }
      auto cat = lexicon_category_from_string(tag);
      if (!cat) {
        throw Error(ErrorCode::FormatError, "unknown category '" + std::string(tag) + "'", line_no,
                    t2 + 2);
      }
      try {
        lex.add(english, urdu, *cat);
      } catch (const Error& e) {
        throw Error(e.code(), e.message(), line_no, 1);
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lex;
}

inline std::string serialize_lexicon(const Lexicon& lex) {
  std::string out;
  for (const auto& e : lex.entries()) {
    out += e.english + "\t" + e.urdu + "\t" + std::string(lexicon_category_name(e.category)) + "\n";
  }
  return out;
}

}  // namespace textcirc
