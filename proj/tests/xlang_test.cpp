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

#include <string>
#include <tuple>
#include <vector>

#include "test_support.hpp"

namespace textcirc {
namespace {

using testing::error_of;

const Lexicon& lex() { return fixture_lexicon(); }

/// (label, rule, entity) of every node in canonical pre-order.
std::vector<std::tuple<Symbol, int, int>> skeleton(const SyntaxTree& t, Language lang) {
  const auto& table = GeneratorTable::for_language(lang);
  std::vector<std::tuple<Symbol, int, int>> out;
  visit_canonical(t, table, [&](const SyntaxTree& n, const TreePath&) {
    const int rule = n.is_leaf() ? -1 : static_cast<int>(match_rule(n, table)->rule);
    out.emplace_back(n.label, rule, n.entity.value_or(0));
  });
  return out;
}

std::size_t node_count(const SyntaxTree& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += node_count(c);
  return n;
}

TEST(TranslateTree, JohnReadsBooks) {
  const auto e = parse_tree("(S (NP#1 John) (TVP reads) (NP#2 books))");
  const auto u = translate_tree(e, lex(), Direction::EnglishToUrdu);
  EXPECT_EQ(serialize_tree(u), "(S (NP#1 John) (NP#2 kitabein) (TVP \"parhta hai\"))");
  EXPECT_EQ(linearize(u), "John kitabein parhta hai");
  EXPECT_EQ(translate_tree(u, lex(), Direction::UrduToEnglish), e);
}

TEST(TranslateTree, StudentTeacher) {
  const auto e = testing::fixture_text("student_en.txt", Language::English);
  const auto u = testing::fixture_text("student_ur.txt", Language::Urdu);
  const auto t = translate_tree(e.sentences[0], lex(), Direction::EnglishToUrdu);
  EXPECT_EQ(t, u.sentences[0]);
  EXPECT_EQ(linearize(t),
            "nojawan talib-e-ilm jo imandar ustad shauq se parhate huwe dekhta hai us ki taraf "
            "muskurata hai");
}

TEST(TranslateTree, Errors) {
  const auto e = parse_tree("(S (NP#1 John) (IVP flies))");
  EXPECT_EQ(error_of([&] { translate_tree(e, lex(), Direction::EnglishToUrdu); }),
            "MissingDictionaryEntry");
  const auto u = parse_tree("(S (NP#1 John) (NP#2 kitabein) (TVP \"parhta hai\"))");
  EXPECT_EQ(error_of([&] { translate_tree(u, lex(), Direction::EnglishToUrdu); }),
            "ValidationFailure");
}

TEST(TranslateTree, IsomorphismAndInvolutionOnShapes) {
  testing::ShapeEnumerator shapes(2);
  std::size_t n = 0;
  shapes.for_each_sentence(3, [&](SyntaxTree shape) {
    const auto e = testing::fill_words(std::move(shape), n++);
    const auto u = translate_tree(e, lex(), Direction::EnglishToUrdu);
    EXPECT_EQ(node_count(u), node_count(e));
    EXPECT_EQ(skeleton(u, Language::Urdu), skeleton(e, Language::English)) << serialize_tree(e);
    EXPECT_EQ(translate_tree(u, lex(), Direction::UrduToEnglish), e);
  });
  EXPECT_EQ(n, 694u);
}

TEST(TranslateTree, InvolutionOnRandomTrees) {
  testing::RandomTexts gen(17);
  for (int trial = 0; trial < 500; ++trial) {
    const auto e = gen.sentence(5);
    const auto u = translate_tree(e, lex(), Direction::EnglishToUrdu);
    ASSERT_EQ(translate_tree(u, lex(), Direction::UrduToEnglish), e) << serialize_tree(e);
  }
}

/// Path of the unique NP leaf carrying `entity` in `tree`.
TreePath find_entity(const SyntaxTree& tree, int entity) {
  std::vector<TreePath> hits;
  TreePath path;
  std::function<void(const SyntaxTree&)> rec = [&](const SyntaxTree& n) {
    if (n.is_leaf() && n.label == Symbol::NP && n.entity == entity) hits.push_back(path);
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      path.push_back(i);
      rec(n.children[i]);
      path.pop_back();
    }
  };
  rec(tree);
  EXPECT_EQ(hits.size(), 1u);
  return hits.empty() ? TreePath{} : hits[0];
}

TEST(TranslateText, FatimaKeepsLinks) {
  const auto e = testing::fixture_text("fatima_en.txt", Language::English);
  const auto u = translate_text(e, lex(), Direction::EnglishToUrdu);
  EXPECT_EQ(u, testing::fixture_text("fatima_ur.txt", Language::Urdu));
  ASSERT_EQ(u.links.size(), e.links.size());
  for (std::size_t i = 0; i < e.links.size(); ++i) {
    const auto& l = e.links[i];
    const int ref = *resolve(e, l.referent)->entity;
    const int ana = *resolve(e, l.anaphor)->entity;
    EXPECT_EQ(u.links[i].referent.path, find_entity(u.sentences[l.referent.sentence], ref));
    EXPECT_EQ(u.links[i].anaphor.path, find_entity(u.sentences[l.anaphor.sentence], ana));
    EXPECT_EQ(u.links[i].surface, l.surface);
  }
  EXPECT_EQ(translate_text(u, lex(), Direction::UrduToEnglish), e);
}

TEST(TranslateText, NoLinksAndStudentTeacher) {
  const auto john = testing::fixture_text("john_en.txt", Language::English);
  const auto u = translate_text(john, lex(), Direction::EnglishToUrdu);
  ASSERT_EQ(u.sentences.size(), 1u);
  EXPECT_TRUE(u.links.empty());
  EXPECT_EQ(u.sentences[0], translate_tree(john.sentences[0], lex(), Direction::EnglishToUrdu));

  const auto e = testing::fixture_text("student_en.txt", Language::English);
  const auto t = translate_text(e, lex(), Direction::EnglishToUrdu);
  EXPECT_EQ(t, testing::fixture_text("student_ur.txt", Language::Urdu));
  const auto& him = t.links.back();
  EXPECT_EQ(*resolve(t, him.anaphor)->word, "us");
  EXPECT_EQ(*resolve(t, him.referent)->word, "ustad");
  EXPECT_EQ(error_of([&] { translate_text(t, lex(), Direction::EnglishToUrdu); }),
            "ValidationFailure");
}

TEST(TranslateText, RandomTextsInvolution) {
  testing::RandomTexts gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto e = gen.text(4, 3);
    const auto u = translate_text(e, lex(), Direction::EnglishToUrdu);
    EXPECT_EQ(error_of([&] { require_valid_text(u, GeneratorTable::for_language(Language::Urdu)); }),
              "none");
    EXPECT_EQ(translate_text(u, lex(), Direction::UrduToEnglish), e);
  }
}

TEST(VerifyCommuting, Examples) {
  for (const char* name : {"john_en.txt", "student_en.txt", "fatima_en.txt", "copula_en.txt",
                           "prenominal_en.txt"}) {
    const auto report = verify_commuting(testing::fixture_text(name, Language::English), lex());
    EXPECT_TRUE(report.equal) << name;
    EXPECT_EQ(report.canonical_source_translated, report.canonical_target);
  }
  const auto ur = verify_commuting(testing::fixture_text("student_ur.txt", Language::Urdu), lex());
  EXPECT_TRUE(ur.equal);
}

TEST(VerifyCommuting, RandomFiveSentenceTexts) {
  testing::RandomTexts gen(29);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = gen.text(5, 3);
    EXPECT_TRUE(verify_commuting(t, lex()).equal) << serialize_hybrid_text(t);
  }
}

}  // namespace
}  // namespace textcirc
