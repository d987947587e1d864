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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace textcirc {
namespace {

using testing::error_of;

const GeneratorTable& en() { return GeneratorTable::for_language(Language::English); }
const GeneratorTable& ur() { return GeneratorTable::for_language(Language::Urdu); }

SyntaxTree john_reads_books() {
  const std::vector<DerivationStep> steps{{RuleId::TransVerb, 0}};
  return derive(en(), steps, {{0, "John"}, {1, "reads"}, {2, "books"}});
}

TEST(Derive, EnglishTransitive) {
  const SyntaxTree t = john_reads_books();
  EXPECT_EQ(linearize(t), "John reads books");
  ASSERT_EQ(t.children.size(), 3u);
  EXPECT_EQ(t.children[0].entity, 1);
  EXPECT_EQ(t.children[2].entity, 2);
  EXPECT_TRUE(validate(t, en()).ok());
}

TEST(Derive, UrduTransitive) {
  const std::vector<DerivationStep> steps{{RuleId::TransVerb, 0}};
  const SyntaxTree t = derive(ur(), steps, {{0, "John"}, {1, "kitabein"}, {2, "parhta hai"}});
  EXPECT_EQ(linearize(t), "John kitabein parhta hai");
  EXPECT_EQ(t.child_labels(), (std::vector<Symbol>{Symbol::NP, Symbol::NP, Symbol::TVP}));
  // entities follow the shared canonical order: subject 1, object 2
  EXPECT_EQ(t.children[0].entity, 1);
  EXPECT_EQ(t.children[1].entity, 2);
  EXPECT_TRUE(validate(t, ur()).ok());
}

TEST(Derive, Errors) {
  EXPECT_EQ(error_of([] { derive(en(), std::vector<DerivationStep>{}, {}); }),
            "SymbolPositionInvalid");
  EXPECT_EQ(error_of([] {
              derive(en(), std::vector<DerivationStep>{{RuleId::TransVerb, 3}}, {});
            }),
            "SymbolPositionInvalid");
  // IVP rule aimed at S
  EXPECT_EQ(error_of([] {
              derive(en(), std::vector<DerivationStep>{{RuleId::AdverbIV, 0}}, {});
            }),
            "SymbolPositionInvalid");
  GeneratorTable no_relative(Language::English, {*en().find(RuleId::IntransVerb)});
  EXPECT_EQ(error_of([&] {
              derive(no_relative, std::vector<DerivationStep>{{RuleId::Relative, 0}}, {});
            }),
            "UnknownRule");
  const auto restricted = restricted_to(en(), fixture_lexicon());
  EXPECT_EQ(error_of([&] {
              derive(restricted, std::vector<DerivationStep>{{RuleId::IntransVerb, 0}},
                     {{0, "Fatima"}, {1, "flies"}});
            }),
            "VocabularyViolation");
  EXPECT_EQ(error_of([] { rule_from_string("Passive"); }), "UnknownRule");
}

TEST(Validate, ReportsFirstFailure) {
  const SyntaxTree t = john_reads_books();
  const auto report = validate(t, ur());
  ASSERT_FALSE(report.ok());
  EXPECT_TRUE(report.violations.front().path.empty());

  const auto leaf = SyntaxTree::leaf(Symbol::NP, "John", 1);
  EXPECT_FALSE(validate(leaf, en()).ok());

  SyntaxTree zero = t;
  zero.children[0].entity = 0;
  const auto bad = validate(zero, en());
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.violations.front().path, (TreePath{0}));

  EXPECT_EQ(error_of([&] { require_valid(t, ur()); }), "ValidationFailure");
}

TEST(Linearize, IntransitiveAndErrors) {
  const auto t = SyntaxTree::node(
      Symbol::S, {SyntaxTree::leaf(Symbol::NP, "Fatima", 1), SyntaxTree::leaf(Symbol::IVP, "smiles")});
  EXPECT_EQ(linearize(t), "Fatima smiles");
  EXPECT_TRUE(validate(t, en()).ok());
  auto open = t;
  open.children[1].word.reset();
  EXPECT_EQ(error_of([&] { linearize(open); }), "NonTerminalLeaf");
}

TEST(Tables, OnlyOrderDiffers) {
  std::vector<RuleId> reordered;
  for (RuleId r : kAllRules) {
    const Generator* e = en().find(r);
    const Generator* u = ur().find(r);
    ASSERT_NE(e, nullptr);
    ASSERT_NE(u, nullptr);
    EXPECT_EQ(e->lhs, u->lhs);
    EXPECT_EQ(e->scope_introducing, u->scope_introducing);
    auto a = e->rhs;
    auto b = u->rhs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b) << to_string(r);
    EXPECT_EQ(e->canonical_rhs(), u->canonical_rhs()) << to_string(r);
    if (e->rhs != u->rhs) reordered.push_back(r);
  }
  EXPECT_EQ(reordered, (std::vector<RuleId>{RuleId::TransVerb, RuleId::AdjectivePost,
                                            RuleId::AdpositionIV, RuleId::SentCompVerb}));
}

TEST(Tables, ExcludedRulesAbsent) {
  // no adposition on a transitive verb phrase
  for (const auto* table : {&en(), &ur()}) {
    for (const auto& g : table->rules()) {
      const bool adp = std::count(g.rhs.begin(), g.rhs.end(), Symbol::ADP) > 0;
      if (adp) {
        EXPECT_EQ(g.lhs, Symbol::IVP);
      }
    }
    EXPECT_EQ(table->match(Symbol::TVP, std::vector<Symbol>{Symbol::TVP, Symbol::ADP, Symbol::NP}),
              nullptr);
  }
}

TEST(Tables, RuleNamesRoundTrip) {
  for (RuleId r : kAllRules) EXPECT_EQ(rule_from_string(to_string(r)), r);
}

/// Random derivations: at each step expand a random live symbol that has a
/// rule (S always, others sometimes), then pick words for the leaves.
struct RandomDerivation {
  std::vector<DerivationStep> steps;
  std::map<std::size_t, std::string> words;
};

RandomDerivation random_derivation(const GeneratorTable& table, std::mt19937_64& rng) {
  RandomDerivation d;
  std::vector<Symbol> form{Symbol::S};
  auto rules_for = [&](Symbol s) {
    std::vector<const Generator*> out;
    for (const auto& g : table.rules()) {
      if (g.lhs == s && g.rule != RuleId::Relative) out.push_back(&g);
    }
    return out;
  };
  for (int budget = 12; budget > 0; --budget) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < form.size(); ++i) {
      if (form[i] == Symbol::S || (!rules_for(form[i]).empty() && rng() % 4 == 0)) {
        open.push_back(i);
      }
    }
    if (open.empty()) break;
    const std::size_t pos = open[rng() % open.size()];
    auto options = rules_for(form[pos]);
    // keep S from growing without bound near the end of the budget
    if (budget < 4 && form[pos] == Symbol::S) {
      std::erase_if(options, [](const Generator* g) {
        return std::count(g->rhs.begin(), g->rhs.end(), Symbol::S) > 0;
      });
    }
    const Generator* g = options[rng() % options.size()];
    d.steps.push_back({g->rule, pos});
    form.erase(form.begin() + static_cast<std::ptrdiff_t>(pos));
    form.insert(form.begin() + static_cast<std::ptrdiff_t>(pos), g->rhs.begin(), g->rhs.end());
  }
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (form[i] == Symbol::S) return random_derivation(table, rng);
    if (form[i] == Symbol::COP) {
      d.words[i] = function_words(table.language()).copula;
    } else {
      auto vocab = fixture_lexicon().words(form[i], table.language());
      d.words[i] = vocab[rng() % vocab.size()];
    }
  }
  return d;
}

TEST(Derive, RandomDerivationsValidateAndLinearize) {
  std::mt19937_64 rng(7);
  for (Language lang : {Language::English, Language::Urdu}) {
    const auto& table = GeneratorTable::for_language(lang);
    for (int trial = 0; trial < 500; ++trial) {
      const auto d = random_derivation(table, rng);
      const SyntaxTree t = derive(table, d.steps, d.words);
      ASSERT_TRUE(validate(t, table).ok()) << serialize_tree(t);
      std::string expected;
      for (const auto& [pos, w] : d.words) expected += (expected.empty() ? "" : " ") + w;
      EXPECT_EQ(linearize(t), expected);
      // every internal node is justified by exactly one rule
      std::function<void(const SyntaxTree&)> check = [&](const SyntaxTree& n) {
        if (n.is_leaf()) return;
        int matches = 0;
        for (const auto& g : table.rules()) {
          if (g.lhs == n.label && g.rhs == n.child_labels()) ++matches;
        }
        EXPECT_EQ(matches, 1);
        for (const auto& c : n.children) check(c);
      };
      check(t);
    }
  }
}

TEST(Derive, EnumeratedShapesValidateInBothLanguages) {
  testing::ShapeEnumerator shapes(2);
  std::size_t n = 0;
  for (int depth = 1; depth <= 2; ++depth) {
    for (const auto& s : shapes.sentences(depth)) {
      const auto t = testing::fill_words(s, n++);
      ASSERT_TRUE(validate(t, en()).ok()) << serialize_tree(t);
      EXPECT_LE(testing::rule_depth(t), depth);
      const auto u = translate_tree(t, fixture_lexicon(), Direction::EnglishToUrdu);
      EXPECT_TRUE(validate(u, ur()).ok()) << serialize_tree(u);
    }
  }
  EXPECT_EQ(shapes.sentences(1).size(), 3u);
  EXPECT_EQ(shapes.sentences(2).size(), 25u);
}

}  // namespace
}  // namespace textcirc
