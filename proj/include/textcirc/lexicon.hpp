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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "textcirc/error.hpp"
#include "textcirc/grammar.hpp"

namespace textcirc {

enum class Direction { EnglishToUrdu, UrduToEnglish };

inline Direction direction_from(Language source) {
  return source == Language::English ? Direction::EnglishToUrdu : Direction::UrduToEnglish;
}

inline Language source_language(Direction d) {
  return d == Direction::EnglishToUrdu ? Language::English : Language::Urdu;
}

struct LexiconEntry {
  std::string english;
  std::string urdu;
  Symbol category;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

/// English/Urdu word pairs per lexical category. Within a category the
/// relation is kept bijective; add() rejects entries that would break it.
class Lexicon {
 public:
  Lexicon() = default;

  void add(const std::string& english, const std::string& urdu, Symbol category) {
    auto& fwd = forward_[category];
    auto& bwd = backward_[category];
    auto f = fwd.find(english);
    auto b = bwd.find(urdu);
    if (f != fwd.end() && b != bwd.end() && f->second == urdu) return;
    if (f != fwd.end() || b != bwd.end()) {
      throw Error(ErrorCode::FormatError, "lexicon entry " + english + "/" + urdu + " (" +
                                              std::string(to_string(category)) +
                                              ") breaks the one-to-one mapping");
    }
    fwd.emplace(english, urdu);
    bwd.emplace(urdu, english);
    entries_.push_back({english, urdu, category});
  }

  std::optional<std::string> lookup(const std::string& word, Symbol category,
                                    Direction dir) const {
    const auto& side = dir == Direction::EnglishToUrdu ? forward_ : backward_;
    auto c = side.find(category);
    if (c == side.end()) return std::nullopt;
    auto w = c->second.find(word);
    if (w == c->second.end()) return std::nullopt;
    return w->second;
  }

  std::string translate(const std::string& word, Symbol category, Direction dir) const {
    auto out = lookup(word, category, dir);
    if (!out) {
      throw Error(ErrorCode::MissingDictionaryEntry,
                  "no " + std::string(dir == Direction::EnglishToUrdu ? "Urdu" : "English") +
                      " entry for " + std::string(to_string(category)) + " '" + word + "'");
    }
    return *out;
  }

  /// Words of one language under one category, sorted.
  std::vector<std::string> words(Symbol category, Language lang) const {
    std::vector<std::string> out;
    const auto& side = lang == Language::English ? forward_ : backward_;
    auto c = side.find(category);
    if (c == side.end()) return out;
    for (const auto& [w, _] : c->second) out.push_back(w);
    return out;
  }

  /// Entries in insertion order.
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<LexiconEntry> entries_;
  std::map<Symbol, std::map<std::string, std::string>> forward_;
  std::map<Symbol, std::map<std::string, std::string>> backward_;
};

/// Restricts every lexical slot of `table` to the lexicon's words in the
/// table's language.
inline GeneratorTable restricted_to(GeneratorTable table, const Lexicon& lexicon) {
  for (Symbol s : kAllSymbols) {
    if (s == Symbol::S || s == Symbol::COP) continue;
    auto words = lexicon.words(s, table.language());
    table.restrict_vocabulary(s, std::set<std::string>(words.begin(), words.end()));
  }
  return table;
}

}  // namespace textcirc
