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
 * @file grammar.hpp
 *
 * Generator sets for the English and Urdu fragments, syntax trees, and the
 * three basic tree operations: derivation from S, validation against a
 * generator table, and linearization to a surface string.
 *
 * Both languages share one rule inventory. A rule's right-hand side is kept
 * in surface order together with a slot map into the rule's canonical
 * (English) order, so the Urdu generators are literally the English ones with
 * their outputs permuted.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "textcirc/error.hpp"

namespace textcirc {

enum class Language { English, Urdu };

inline std::string_view to_string(Language lang) {
  return lang == Language::English ? "English" : "Urdu";
}

inline Language other(Language lang) {
  return lang == Language::English ? Language::Urdu : Language::English;
}

/// Node labels. NP, IVP and TVP occur both as phrases and as lexical
/// leaves; ADJ through COP are lexical only; S is never a leaf.
enum class Symbol { S, NP, IVP, TVP, ADJ, ADV, ADP, SCV, CNJ, COP };

inline constexpr Symbol kAllSymbols[] = {
    Symbol::S,   Symbol::NP,  Symbol::IVP, Symbol::TVP, Symbol::ADJ,
    Symbol::ADV, Symbol::ADP, Symbol::SCV, Symbol::CNJ, Symbol::COP};

inline std::string_view to_string(Symbol s) {
  switch (s) {
    case Symbol::S: return "S";
    case Symbol::NP: return "NP";
    case Symbol::IVP: return "IVP";
    case Symbol::TVP: return "TVP";
    case Symbol::ADJ: return "ADJ";
    case Symbol::ADV: return "ADV";
    case Symbol::ADP: return "ADP";
    case Symbol::SCV: return "SCV";
    case Symbol::CNJ: return "CNJ";
    case Symbol::COP: return "COP";
  }
  return "?";
}

inline std::optional<Symbol> symbol_from_string(std::string_view text) {
  for (Symbol s : kAllSymbols) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

inline bool can_be_leaf(Symbol s) { return s != Symbol::S; }

enum class RuleId {
  IntransVerb,
  TransVerb,
  AdjectivePre,
  AdjectivePost,
  AdverbIV,
  AdverbTV,
  AdpositionIV,
  SentCompVerb,
  Conjunction,
  Relative,
};

inline constexpr RuleId kAllRules[] = {
    RuleId::IntransVerb,  RuleId::TransVerb,    RuleId::AdjectivePre,
    RuleId::AdjectivePost, RuleId::AdverbIV,    RuleId::AdverbTV,
    RuleId::AdpositionIV, RuleId::SentCompVerb, RuleId::Conjunction,
    RuleId::Relative};

inline std::string_view to_string(RuleId r) {
  switch (r) {
    case RuleId::IntransVerb: return "Intrans.Verb";
    case RuleId::TransVerb: return "Trans.Verb";
    case RuleId::AdjectivePre: return "Adjective(Pre.)";
    case RuleId::AdjectivePost: return "Adjective(Post.)";
    case RuleId::AdverbIV: return "Adverb(IV)";
    case RuleId::AdverbTV: return "Adverb(TV)";
    case RuleId::AdpositionIV: return "Adposition(IV)";
    case RuleId::SentCompVerb: return "Sent.Comp.Verb";
    case RuleId::Conjunction: return "Conjunction";
    case RuleId::Relative: return "Relative";
  }
  return "?";
}

inline RuleId rule_from_string(std::string_view name) {
  for (RuleId r : kAllRules) {
    if (to_string(r) == name) return r;
  }
  throw Error(ErrorCode::UnknownRule, "no rule named '" + std::string(name) + "'");
}

/// One production rule of one language. `rhs` is in surface order;
/// `slots[i]` is the canonical position of `rhs[i]`.
struct Generator {
  RuleId rule;
  Symbol lhs;
  std::vector<Symbol> rhs;
  std::vector<std::size_t> slots;
  Language language;
  bool scope_introducing = false;

  /// rhs rearranged into canonical slot order.
  std::vector<Symbol> canonical_rhs() const {
    std::vector<Symbol> out(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) out[slots[i]] = rhs[i];
    return out;
  }

  /// Surface position that holds canonical slot `slot`.
  std::size_t surface_of(std::size_t slot) const {
    auto it = std::find(slots.begin(), slots.end(), slot);
    return static_cast<std::size_t>(it - slots.begin());
  }
};

namespace detail {

inline Generator make_generator(Language lang, RuleId rule, Symbol lhs,
                                std::vector<Symbol> canonical,
                                std::vector<std::size_t> surface_slots,
                                bool scope) {
  Generator g{rule, lhs, {}, std::move(surface_slots), lang, scope};
  g.rhs.reserve(canonical.size());
  for (std::size_t slot : g.slots) g.rhs.push_back(canonical[slot]);
  return g;
}

inline std::vector<Generator> standard_generators(Language lang) {
  using S = Symbol;
  const bool ur = lang == Language::Urdu;
  std::vector<Generator> out;
  auto add = [&](RuleId r, Symbol lhs, std::vector<Symbol> canon,
                 std::vector<std::size_t> urdu_slots, bool scope = false) {
    std::vector<std::size_t> identity(canon.size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
    out.push_back(make_generator(lang, r, lhs, std::move(canon),
                                 ur ? std::move(urdu_slots) : identity, scope));
  };
  add(RuleId::IntransVerb, S::S, {S::NP, S::IVP}, {0, 1});
  // subject-object-verb in Urdu
  add(RuleId::TransVerb, S::S, {S::NP, S::TVP, S::NP}, {0, 2, 1});
  add(RuleId::AdjectivePre, S::NP, {S::ADJ, S::NP}, {0, 1});
  // copula to the right of the adjective in Urdu
  add(RuleId::AdjectivePost, S::S, {S::NP, S::COP, S::ADJ}, {0, 2, 1});
  add(RuleId::AdverbIV, S::IVP, {S::ADV, S::IVP}, {0, 1});
  add(RuleId::AdverbTV, S::TVP, {S::ADV, S::TVP}, {0, 1});
  // verb comes last in Urdu
  add(RuleId::AdpositionIV, S::IVP, {S::IVP, S::ADP, S::NP}, {2, 1, 0});
  // complement precedes the verb in Urdu
  add(RuleId::SentCompVerb, S::IVP, {S::SCV, S::S}, {1, 0}, true);
  add(RuleId::Conjunction, S::S, {S::S, S::CNJ, S::S}, {0, 1, 2}, true);
  add(RuleId::Relative, S::NP, {S::NP, S::S}, {0, 1});
  return out;
}

}  // namespace detail

/// Function words fixed by the language rather than by a lexicon.
struct FunctionWords {
  std::string copula;
  std::string relative_pronoun;
  std::string subject_pronoun;
  std::string object_pronoun;
};

inline const FunctionWords& function_words(Language lang) {
  static const FunctionWords en{"is", "who", "he", "him"};
  static const FunctionWords ur{"hai", "jo", "woh", "us"};
  return lang == Language::English ? en : ur;
}

class GeneratorTable {
 public:
  GeneratorTable(Language lang, std::vector<Generator> rules)
      : language_(lang), rules_(std::move(rules)) {}

  /// The full rule inventory of a language with unrestricted vocabulary.
  static const GeneratorTable& for_language(Language lang) {
    static const GeneratorTable en(Language::English, detail::standard_generators(Language::English));
    static const GeneratorTable ur(Language::Urdu, detail::standard_generators(Language::Urdu));
    return lang == Language::English ? en : ur;
  }

  Language language() const { return language_; }
  const std::vector<Generator>& rules() const { return rules_; }

  const Generator* find(RuleId rule) const {
    for (const auto& g : rules_) {
      if (g.rule == rule) return &g;
    }
    return nullptr;
  }

  const Generator* match(Symbol lhs, std::span<const Symbol> children) const {
    for (const auto& g : rules_) {
      if (g.lhs == lhs && std::equal(g.rhs.begin(), g.rhs.end(),
                                     children.begin(), children.end())) {
        return &g;
      }
    }
    return nullptr;
  }

  /// Restricts the terminals admissible under `slot`. A slot with no entry
  /// accepts any word, except COP which always requires the copula.
  GeneratorTable& restrict_vocabulary(Symbol slot, std::set<std::string> words) {
    lexicon_slots_[slot] = std::move(words);
    return *this;
  }

  const std::map<Symbol, std::set<std::string>>& lexicon_slots() const {
    return lexicon_slots_;
  }

  bool admits(Symbol slot, std::string_view word) const {
    if (slot == Symbol::COP) return word == function_words(language_).copula;
    auto it = lexicon_slots_.find(slot);
    if (it == lexicon_slots_.end()) return true;
    return it->second.count(std::string(word)) > 0;
  }

 private:
  Language language_;
  std::vector<Generator> rules_;
  std::map<Symbol, std::set<std::string>> lexicon_slots_;
};

struct SyntaxTree {
  Symbol label = Symbol::S;
  std::vector<SyntaxTree> children;
  std::optional<std::string> word;
  std::optional<int> entity;

  static SyntaxTree leaf(Symbol label, std::string word,
                         std::optional<int> entity = std::nullopt) {
    SyntaxTree t;
    t.label = label;
    t.word = std::move(word);
    t.entity = entity;
    return t;
  }

  static SyntaxTree node(Symbol label, std::vector<SyntaxTree> children) {
    SyntaxTree t;
    t.label = label;
    t.children = std::move(children);
    return t;
  }

  bool is_leaf() const { return children.empty(); }

  std::vector<Symbol> child_labels() const {
    std::vector<Symbol> out;
    out.reserve(children.size());
    for (const auto& c : children) out.push_back(c.label);
    return out;
  }

  friend bool operator==(const SyntaxTree&, const SyntaxTree&) = default;
};

using TreePath = std::vector<std::size_t>;

inline const SyntaxTree* at_path(const SyntaxTree& tree, std::span<const std::size_t> path) {
  const SyntaxTree* node = &tree;
  for (std::size_t i : path) {
    if (i >= node->children.size()) return nullptr;
    node = &node->children[i];
  }
  return node;
}

inline SyntaxTree* at_path(SyntaxTree& tree, std::span<const std::size_t> path) {
  SyntaxTree* node = &tree;
  for (std::size_t i : path) {
    if (i >= node->children.size()) return nullptr;
    node = &node->children[i];
  }
  return node;
}

inline std::string path_to_string(std::span<const std::size_t> path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out.empty() ? "<root>" : out;
}

/// Rule justifying an internal node, or nullptr for leaves and unmatched nodes.
inline const Generator* match_rule(const SyntaxTree& node, const GeneratorTable& table) {
  if (node.is_leaf()) return nullptr;
  for (const auto& g : table.rules()) {
    if (g.lhs == node.label &&
        std::equal(g.rhs.begin(), g.rhs.end(), node.children.begin(), node.children.end(),
                   [](Symbol s, const SyntaxTree& c) { return s == c.label; })) {
      return &g;
    }
  }
  return nullptr;
}

/// Surface indices of `node`'s children listed in canonical slot order.
/// Throws ValidationFailure when the node matches no rule.
inline std::vector<std::size_t> canonical_child_order(const SyntaxTree& node,
                                                      const GeneratorTable& table) {
  if (node.is_leaf()) return {};
  const Generator* g = match_rule(node, table);
  if (g == nullptr) {
    throw Error(ErrorCode::ValidationFailure,
                "no " + std::string(to_string(table.language())) + " rule for " +
                    std::string(to_string(node.label)) + " node");
  }
  std::vector<std::size_t> order(g->slots.size());
  for (std::size_t i = 0; i < g->slots.size(); ++i) order[g->slots[i]] = i;
  return order;
}

/// Visits every node in canonical (rule slot) order, pre-order.
/// `fn(node, path)` sees surface paths.
template <typename Fn>
void visit_canonical(const SyntaxTree& tree, const GeneratorTable& table, Fn&& fn) {
  TreePath path;
  auto rec = [&](auto&& self, const SyntaxTree& node) -> void {
    fn(node, std::as_const(path));
    for (std::size_t i : canonical_child_order(node, table)) {
      path.push_back(i);
      self(self, node.children[i]);
      path.pop_back();
    }
  };
  rec(rec, tree);
}

struct Violation {
  TreePath path;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks a sentence tree against a table. Violations are listed in
/// pre-order, so the first entry is the first failure.
inline ValidationReport validate(const SyntaxTree& tree, const GeneratorTable& table) {
  ValidationReport report;
  auto fail = [&](const TreePath& p, std::string msg) {
    report.violations.push_back({p, std::move(msg)});
  };
  if (tree.label != Symbol::S || tree.is_leaf()) {
    fail({}, "root must be an S phrase, found " + std::string(to_string(tree.label)) +
                 (tree.is_leaf() ? " leaf" : ""));
  }
  TreePath path;
  auto rec = [&](auto&& self, const SyntaxTree& node) -> void {
    const std::string label(to_string(node.label));
    if (node.is_leaf()) {
      if (!can_be_leaf(node.label)) {
        fail(path, label + " cannot be a leaf");
      } else if (!node.word) {
        fail(path, label + " leaf has no terminal");
      } else if (!table.admits(node.label, *node.word)) {
        fail(path, "'" + *node.word + "' is not admissible under " + label);
      }
      if (node.label == Symbol::NP) {
        if (!node.entity) fail(path, "NP leaf without entity index");
        else if (*node.entity <= 0) fail(path, "entity index must be positive");
      } else if (node.entity) {
        fail(path, "entity index on non-NP leaf");
      }
      return;
    }
    if (node.word) fail(path, label + " phrase carries a terminal");
    if (node.entity) fail(path, "entity index on internal node");
    if (match_rule(node, table) == nullptr) {
      std::string rhs;
      for (Symbol s : node.child_labels()) rhs += " " + std::string(to_string(s));
      fail(path, "no " + std::string(to_string(table.language())) + " rule " + label +
                     " ->" + rhs);
    }
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      path.push_back(i);
      self(self, node.children[i]);
      path.pop_back();
    }
  };
  rec(rec, tree);
  return report;
}

inline void require_valid(const SyntaxTree& tree, const GeneratorTable& table) {
  auto report = validate(tree, table);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::ValidationFailure, path_to_string(v.path) + ": " + v.message);
  }
}

/// Surface string: leaf words left to right, single-space separated.
inline std::string linearize(const SyntaxTree& tree) {
  std::string out;
  auto rec = [&](auto&& self, const SyntaxTree& node) -> void {
    if (node.is_leaf()) {
      if (!node.word) {
        throw Error(ErrorCode::NonTerminalLeaf,
                    std::string(to_string(node.label)) + " leaf has no terminal");
      }
      if (!out.empty()) out += ' ';
      out += *node.word;
      return;
    }
    for (const auto& c : node.children) self(self, c);
  };
  rec(rec, tree);
  return out;
}

struct DerivationStep {
  RuleId rule;
  /// Index into the current sentential form, left to right.
  std::size_t position;
};

/**
 * Applies `steps` to the start symbol, then fills every remaining symbol of
 * the sentential form from `lexical_choices` (keyed by final left-to-right
 * position). NP leaves receive entity indices 1, 2, ... in canonical
 * traversal order, so a derivation and its translation agree on indices.
 */
inline SyntaxTree derive(const GeneratorTable& table, std::span<const DerivationStep> steps,
                         const std::map<std::size_t, std::string>& lexical_choices) {
  SyntaxTree root;
  root.label = Symbol::S;
  // Child vectors are sized once at expansion, so these pointers stay valid.
  std::vector<SyntaxTree*> form{&root};
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& step = steps[k];
    const Generator* g = table.find(step.rule);
    if (g == nullptr) {
      throw Error(ErrorCode::UnknownRule, "rule " + std::string(to_string(step.rule)) +
                                              " is not in the " +
                                              std::string(to_string(table.language())) +
                                              " table");
    }
    if (step.position >= form.size()) {
      throw Error(ErrorCode::SymbolPositionInvalid,
                  "step " + std::to_string(k) + " addresses position " +
                      std::to_string(step.position) + " of a form with " +
                      std::to_string(form.size()) + " symbols");
    }
    SyntaxTree* target = form[step.position];
    if (target->label != g->lhs) {
      throw Error(ErrorCode::SymbolPositionInvalid,
                  "step " + std::to_string(k) + ": " + std::string(to_string(step.rule)) +
                      " rewrites " + std::string(to_string(g->lhs)) + ", position holds " +
                      std::string(to_string(target->label)));
    }
    target->children.resize(g->rhs.size());
    std::vector<SyntaxTree*> replacement;
    for (std::size_t i = 0; i < g->rhs.size(); ++i) {
      target->children[i].label = g->rhs[i];
      replacement.push_back(&target->children[i]);
    }
    form.erase(form.begin() + static_cast<std::ptrdiff_t>(step.position));
    form.insert(form.begin() + static_cast<std::ptrdiff_t>(step.position),
                replacement.begin(), replacement.end());
  }
  for (const auto& [pos, word] : lexical_choices) {
    if (pos >= form.size()) {
      throw Error(ErrorCode::SymbolPositionInvalid,
                  "lexical choice for position " + std::to_string(pos) +
                      " beyond the final form of " + std::to_string(form.size()));
    }
  }
  for (std::size_t pos = 0; pos < form.size(); ++pos) {
    SyntaxTree* slot = form[pos];
    if (!can_be_leaf(slot->label)) {
      throw Error(ErrorCode::SymbolPositionInvalid,
                  "S at position " + std::to_string(pos) + " never resolved");
    }
    auto it = lexical_choices.find(pos);
    if (it == lexical_choices.end()) {
      throw Error(ErrorCode::SymbolPositionInvalid,
                  "no lexical choice for " + std::string(to_string(slot->label)) +
                      " at position " + std::to_string(pos));
    }
    if (!table.admits(slot->label, it->second)) {
      throw Error(ErrorCode::VocabularyViolation,
                  "'" + it->second + "' is not admissible under " +
                      std::string(to_string(slot->label)));
    }
    slot->word = it->second;
  }
  // Entity indices follow canonical order; paths are re-resolved because
  // visit_canonical hands out const references.
  std::vector<TreePath> np_paths;
  visit_canonical(root, table, [&](const SyntaxTree& node, const TreePath& path) {
    if (node.is_leaf() && node.label == Symbol::NP) np_paths.push_back(path);
  });
  int next = 1;
  for (const auto& p : np_paths) at_path(root, p)->entity = next++;
  return root;
}

}  // namespace textcirc
