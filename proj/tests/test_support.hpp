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

// Shared helpers for the test suites: fixture loading, exhaustive sentence
// enumeration and random texts.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "textcirc/textcirc.hpp"

namespace textcirc::testing {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(TEXTCIRC_FIXTURE_DIR) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Name of the error code `fn` throws, or "none".
template <typename Fn>
std::string error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return std::string(to_string(e.code()));
  }
  return "none";
}

inline HybridText fixture_text(const std::string& name, Language lang) {
  return parse_hybrid_text(read_fixture(name), lang);
}

/// English words of a category, leaving out pronouns for NP.
inline std::vector<std::string> vocabulary(Symbol category) {
  auto words = fixture_lexicon().words(category, Language::English);
  if (category == Symbol::NP) {
    const auto& fw = function_words(Language::English);
    std::erase_if(words, [&](const std::string& w) {
      return w == fw.subject_pronoun || w == fw.object_pronoun || w == fw.relative_pronoun;
    });
  }
  return words;
}

inline SyntaxTree shape_leaf(Symbol s) { return SyntaxTree::leaf(s, "?"); }

/**
 * All English sentence shapes built from the generator rules (Relative
 * excluded, it only arises from fusion) whose deepest root-to-leaf path
 * applies at most `depth` rules. Leaves carry "?" until `fill_words`.
 */
class ShapeEnumerator {
 public:
  explicit ShapeEnumerator(int max_materialized) {
    for (int d = 0; d <= max_materialized; ++d) {
      np_.push_back(level_np(d));
      tvp_.push_back(level_tvp(d));
      s_.push_back(d == 0 ? std::vector<SyntaxTree>{} : level_s(d));
      ivp_.push_back(level_ivp(d));
    }
  }

  const std::vector<SyntaxTree>& sentences(int depth) const { return s_.at(static_cast<std::size_t>(depth)); }

  /// Streams the sentences of depth <= materialized + 1 without storing them.
  void for_each_sentence(int depth, const std::function<void(SyntaxTree)>& fn) const {
    combine(static_cast<std::size_t>(depth - 1), fn);
  }

 private:
  std::vector<SyntaxTree> level_np(int d) {
    std::vector<SyntaxTree> out{shape_leaf(Symbol::NP)};
    if (d > 0) {
      for (const auto& n : np_[static_cast<std::size_t>(d - 1)]) {
        out.push_back(SyntaxTree::node(Symbol::NP, {shape_leaf(Symbol::ADJ), n}));
      }
    }
    return out;
  }

  std::vector<SyntaxTree> level_tvp(int d) {
    std::vector<SyntaxTree> out{shape_leaf(Symbol::TVP)};
    if (d > 0) {
      for (const auto& t : tvp_[static_cast<std::size_t>(d - 1)]) {
        out.push_back(SyntaxTree::node(Symbol::TVP, {shape_leaf(Symbol::ADV), t}));
      }
    }
    return out;
  }

  std::vector<SyntaxTree> level_ivp(int d) {
    std::vector<SyntaxTree> out{shape_leaf(Symbol::IVP)};
    if (d == 0) return out;
    const auto p = static_cast<std::size_t>(d - 1);
    for (const auto& v : ivp_[p]) {
      out.push_back(SyntaxTree::node(Symbol::IVP, {shape_leaf(Symbol::ADV), v}));
    }
    for (const auto& v : ivp_[p]) {
      for (const auto& n : np_[p]) {
        out.push_back(SyntaxTree::node(Symbol::IVP, {v, shape_leaf(Symbol::ADP), n}));
      }
    }
    for (const auto& s : s_[p]) {
      out.push_back(SyntaxTree::node(Symbol::IVP, {shape_leaf(Symbol::SCV), s}));
    }
    return out;
  }

  std::vector<SyntaxTree> level_s(int d) {
    std::vector<SyntaxTree> out;
    combine(static_cast<std::size_t>(d - 1), [&](SyntaxTree t) { out.push_back(std::move(t)); });
    return out;
  }

  /// Sentences whose children come from level `p`.
  void combine(std::size_t p, const std::function<void(SyntaxTree)>& fn) const {
    for (const auto& a : np_.at(p))
      for (const auto& b : ivp_.at(p)) fn(SyntaxTree::node(Symbol::S, {a, b}));
    for (const auto& a : np_.at(p))
      for (const auto& b : tvp_.at(p))
        for (const auto& c : np_.at(p)) fn(SyntaxTree::node(Symbol::S, {a, b, c}));
    for (const auto& a : np_.at(p)) {
      fn(SyntaxTree::node(Symbol::S, {a, shape_leaf(Symbol::COP), shape_leaf(Symbol::ADJ)}));
    }
    for (const auto& a : s_.at(p))
      for (const auto& b : s_.at(p)) fn(SyntaxTree::node(Symbol::S, {a, shape_leaf(Symbol::CNJ), b}));
  }

  std::vector<std::vector<SyntaxTree>> np_, tvp_, ivp_, s_;
};

/**
 * Fills "?" leaves in pre-order, rotating through the vocabulary from
 * `offset`; NP leaves get fresh entities 1, 2, ... in the same order.
 */
inline SyntaxTree fill_words(SyntaxTree tree, std::size_t offset) {
  static const std::map<Symbol, std::vector<std::string>> vocab = [] {
    std::map<Symbol, std::vector<std::string>> v;
    for (Symbol s : {Symbol::NP, Symbol::IVP, Symbol::TVP, Symbol::ADJ, Symbol::ADV, Symbol::ADP,
                     Symbol::SCV, Symbol::CNJ}) {
      v[s] = vocabulary(s);
    }
    return v;
  }();
  std::map<Symbol, std::size_t> next;
  int entity = 0;
  std::function<void(SyntaxTree&)> rec = [&](SyntaxTree& t) {
    if (t.is_leaf()) {
      if (t.label == Symbol::COP) {
        t.word = "is";
        return;
      }
      const auto& words = vocab.at(t.label);
      t.word = words[(offset + next[t.label]++) % words.size()];
      if (t.label == Symbol::NP) t.entity = ++entity;
      return;
    }
    for (auto& c : t.children) rec(c);
  };
  rec(tree);
  return tree;
}

/// Height of a tree counted in rule applications.
inline int rule_depth(const SyntaxTree& t) {
  if (t.is_leaf()) return 0;
  int d = 0;
  for (const auto& c : t.children) d = std::max(d, rule_depth(c));
  return d + 1;
}

/**
 * Random English texts with shared entities, pronouns, repeated nouns and
 * relative clauses. Every text it returns compiles.
 */
class RandomTexts {
 public:
  explicit RandomTexts(std::uint64_t seed) : rng_(seed) {}

  SyntaxTree sentence(int depth) {
    entity_nouns_.clear();
    nouns_ = vocabulary(Symbol::NP);
    std::shuffle(nouns_.begin(), nouns_.end(), rng_);
    return s(depth);
  }

  /// A compilable text of `sentences` sentences.
  HybridText text(int sentences, int depth) {
    while (true) {
      nouns_ = vocabulary(Symbol::NP);
      std::shuffle(nouns_.begin(), nouns_.end(), rng_);
      entity_nouns_.clear();
      HybridText t;
      t.language = Language::English;
      for (int i = 0; i < sentences; ++i) t.sentences.push_back(s(depth));
      add_links(t);
      if (!compiles(t)) continue;
      maybe_fuse(t);
      return t;
    }
  }

 private:
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  std::string word(Symbol category) {
    static std::map<Symbol, std::vector<std::string>> cache;
    auto& v = cache[category];
    if (v.empty()) v = vocabulary(category);
    return v[below(v.size())];
  }

  SyntaxTree np(int depth) {
    if (depth > 0 && below(4) == 0) {
      return SyntaxTree::node(Symbol::NP, {SyntaxTree::leaf(Symbol::ADJ, word(Symbol::ADJ)), np(depth - 1)});
    }
    // a small entity pool makes repeats likely
    const int e = static_cast<int>(below(4)) + 1;
    auto [it, fresh] = entity_nouns_.emplace(e, "");
    if (fresh) it->second = nouns_[static_cast<std::size_t>(e - 1)];
    return SyntaxTree::leaf(Symbol::NP, it->second, e);
  }

  SyntaxTree ivp(int depth) {
    const std::size_t pick = depth > 0 ? below(5) : 0;
    switch (pick) {
      case 1:
        return SyntaxTree::node(Symbol::IVP, {SyntaxTree::leaf(Symbol::ADV, word(Symbol::ADV)), ivp(depth - 1)});
      case 2:
        return SyntaxTree::node(Symbol::IVP, {ivp(depth - 1), SyntaxTree::leaf(Symbol::ADP, word(Symbol::ADP)), np(depth - 1)});
      case 3:
        return SyntaxTree::node(Symbol::IVP, {SyntaxTree::leaf(Symbol::SCV, word(Symbol::SCV)), s(depth - 1)});
      default: return SyntaxTree::leaf(Symbol::IVP, word(Symbol::IVP));
    }
  }

  SyntaxTree tvp(int depth) {
    if (depth > 0 && below(3) == 0) {
      return SyntaxTree::node(Symbol::TVP, {SyntaxTree::leaf(Symbol::ADV, word(Symbol::ADV)), tvp(depth - 1)});
    }
    return SyntaxTree::leaf(Symbol::TVP, word(Symbol::TVP));
  }

  SyntaxTree s(int depth) {
    const std::size_t pick = depth > 1 ? below(5) : below(4);
    const int d = std::max(depth - 1, 0);
    switch (pick) {
      case 1: return SyntaxTree::node(Symbol::S, {np(d), tvp(d), np(d)});
      case 2:
        return SyntaxTree::node(Symbol::S, {np(d), SyntaxTree::leaf(Symbol::COP, "is"),
                                            SyntaxTree::leaf(Symbol::ADJ, word(Symbol::ADJ))});
      case 4:
        return SyntaxTree::node(Symbol::S, {s(d), SyntaxTree::leaf(Symbol::CNJ, word(Symbol::CNJ)), s(d)});
      default: return SyntaxTree::node(Symbol::S, {np(d), ivp(d)});
    }
  }

  /// Links some repeated mentions to their previous mention; a few become
  /// pronouns.
  void add_links(HybridText& t) {
    std::map<int, NpOccurrence> last;
    for (const auto& occ : np_occurrences(t)) {
      const SyntaxTree* leaf = resolve(t, occ);
      auto it = last.find(*leaf->entity);
      if (it != last.end() && below(2) == 0) {
        const bool pronoun = below(2) == 0;
        if (pronoun) resolve(t, occ)->word = below(2) ? "he" : "him";
        t.links.push_back({it->second, occ, pronoun ? LinkSurface::Pronoun : LinkSurface::RepeatedNoun});
      }
      last[*leaf->entity] = occ;
    }
  }

  static bool compiles(const HybridText& t) {
    try {
      compile_text(t);
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  void maybe_fuse(HybridText& t) {
    for (std::size_t k = 0; k < t.links.size(); ++k) {
      if (below(2) != 0) continue;
      const auto link = t.links[k];
      if (link.anaphor.sentence != link.referent.sentence + 1) continue;
      try {
        HybridText fused = fuse(t, link);
        if (compiles(fused)) t = std::move(fused);
        return;
      } catch (const Error&) {
      }
    }
  }

  std::mt19937_64 rng_;
  std::vector<std::string> nouns_;
  std::map<int, std::string> entity_nouns_;
};

}  // namespace textcirc::testing
