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
#include <set>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace textcirc {
namespace {

using testing::error_of;

HybridText parse_en(const std::string& s) { return parse_hybrid_text(s, Language::English); }

/// Words of every sentence, sorted.
std::vector<std::string> word_multiset(const HybridText& t) {
  std::vector<std::string> out;
  for (const auto& s : t.sentences) {
    std::function<void(const SyntaxTree&)> rec = [&](const SyntaxTree& n) {
      if (n.is_leaf()) out.push_back(*n.word);
      for (const auto& c : n.children) rec(c);
    };
    rec(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Entity classes by transitive closure of "same index or linked".
std::set<std::set<NpOccurrence>> closure_classes(const HybridText& t) {
  const auto occs = np_occurrences(t);
  const std::size_t n = occs.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r[i][j] = i == j || resolve(t, occs[i])->entity == resolve(t, occs[j])->entity;
    }
  }
  for (const auto& l : t.links) {
    const auto a = std::find(occs.begin(), occs.end(), l.referent) - occs.begin();
    const auto b = std::find(occs.begin(), occs.end(), l.anaphor) - occs.begin();
    r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    r[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  std::set<std::set<NpOccurrence>> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<NpOccurrence> c;
    for (std::size_t j = 0; j < n; ++j) {
      if (r[i][j]) c.insert(occs[j]);
    }
    out.insert(c);
  }
  return out;
}

/// (index, size) of each class, sorted.
std::vector<std::pair<int, std::size_t>> class_profile(const HybridText& t) {
  std::vector<std::pair<int, std::size_t>> out;
  for (const auto& e : entities(t)) out.emplace_back(e.index, e.occurrences.size());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Entities, StudentTeacher) {
  const auto t = testing::fixture_text("student_en.txt", Language::English);
  const auto es = entities(t);
  ASSERT_EQ(es.size(), 2u);
  EXPECT_EQ(*resolve(t, es[0].occurrences.front())->word, "student");
  EXPECT_EQ(*resolve(t, es[1].occurrences.front())->word, "teacher");
  std::set<std::string> teacher_words;
  for (const auto& o : es[1].occurrences) teacher_words.insert(*resolve(t, o)->word);
  EXPECT_EQ(teacher_words, (std::set<std::string>{"teacher", "him"}));
}

TEST(Entities, SimpleCases) {
  const auto john = testing::fixture_text("john_en.txt", Language::English);
  const auto es = entities(john);
  ASSERT_EQ(es.size(), 2u);
  EXPECT_EQ(*resolve(john, es[0].occurrences[0])->word, "John");
  EXPECT_EQ(*resolve(john, es[1].occurrences[0])->word, "books");

  const auto t = parse_en("(S (NP#1 Ali) (IVP smiles))\n(S (NP#2 Sara) (IVP dances))\n");
  for (const auto& e : entities(t)) EXPECT_EQ(e.occurrences.size(), 1u);
  EXPECT_EQ(entities(t).size(), 2u);
}

TEST(Entities, MatchTransitiveClosureOnRandomTexts) {
  testing::RandomTexts gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = gen.text(3, 2);
    std::set<std::set<NpOccurrence>> ours;
    NpOccurrence previous_first{};
    bool have_previous = false;
    for (const auto& e : entities(t)) {
      ours.insert({e.occurrences.begin(), e.occurrences.end()});
      ASSERT_TRUE(std::is_sorted(e.occurrences.begin(), e.occurrences.end()));
      // classes come in first-mention order
      if (have_previous) {
        EXPECT_LT(previous_first, e.occurrences.front());
      }
      previous_first = e.occurrences.front();
      have_previous = true;
    }
    EXPECT_EQ(ours, closure_classes(t)) << serialize_hybrid_text(t);
  }
}

TEST(AddLink, MergesEntitiesAndRejectsBadLinks) {
  const auto t = parse_en("(S (NP#1 Fatima) (IVP smiles))\n(S (NP#2 he) (IVP dances))\n");
  const PronominalLink link{{0, {0}}, {1, {0}}, LinkSurface::Pronoun};
  const auto linked = add_link(t, link);
  EXPECT_EQ(linked.links.size(), 1u);
  EXPECT_EQ(entities(linked).size(), 1u);
  EXPECT_EQ(resolve(linked, {1, {0}})->entity, 1);

  EXPECT_EQ(error_of([&] { add_link(t, {{0, {0}}, {0, {0}}, LinkSurface::Pronoun}); }),
            "InvalidOccurrence");
  EXPECT_EQ(error_of([&] { add_link(t, {{0, {1}}, {1, {0}}, LinkSurface::Pronoun}); }),
            "InvalidOccurrence");
  EXPECT_EQ(error_of([&] { add_link(t, {{1, {0}}, {0, {0}}, LinkSurface::Pronoun}); }),
            "OrderViolation");
  EXPECT_EQ(error_of([&] { add_link(t, {{0, {0}}, {1, {0}}, LinkSurface::RelativePronoun}); }),
            "OrderViolation");
  EXPECT_EQ(error_of([&] { add_link(linked, link); }), "DoubleLink");
}

TEST(Fuse, EnglishRelativeClause) {
  const auto t = parse_en(
      "(S (NP#1 student) (TVP sees) (NP#2 teacher))\n(S (NP#1 student) (IVP smiles))\n");
  const auto fused = fuse(t, {{0, {0}}, {1, {0}}, LinkSurface::RepeatedNoun});
  ASSERT_EQ(fused.sentences.size(), 1u);
  EXPECT_EQ(linearize(fused.sentences[0]), "student who sees teacher smiles");
  ASSERT_EQ(fused.links.size(), 1u);
  EXPECT_EQ(fused.links[0].surface, LinkSurface::RelativePronoun);
  EXPECT_EQ(canonicalize(compile_text(fused)), canonicalize(compile_text(t)));
}

TEST(Fuse, UrduRelativeClause) {
  const auto t = parse_hybrid_text(
      "(S (NP#1 talib-e-ilm) (NP#2 ustad) (TVP \"dekhta hai\"))\n"
      "(S (NP#1 talib-e-ilm) (IVP \"muskurata hai\"))\n",
      Language::Urdu);
  const auto fused = fuse(t, {{0, {0}}, {1, {0}}, LinkSurface::RepeatedNoun});
  ASSERT_EQ(fused.sentences.size(), 1u);
  EXPECT_EQ(linearize(fused.sentences[0]), "talib-e-ilm jo ustad dekhta hai muskurata hai");
  EXPECT_EQ(canonicalize(compile_text(fused)), canonicalize(compile_text(t)));
}

TEST(Fuse, Errors) {
  const auto three = parse_en(
      "(S (NP#1 Ali) (IVP smiles))\n(S (NP#2 Sara) (IVP dances))\n(S (NP#1 Ali) (IVP sleeps))\n");
  EXPECT_EQ(error_of([&] { fuse(three, {{0, {0}}, {2, {0}}, LinkSurface::RepeatedNoun}); }),
            "NonAdjacent");

  const auto scoped = parse_en(
      "(S (NP#1 John) (IVP (SCV sees) (S (NP#2 Fatima) (IVP smiles))))\n"
      "(S (NP#2 Fatima) (IVP dances))\n");
  EXPECT_EQ(error_of([&] { fuse(scoped, {{0, {1, 1, 0}}, {1, {0}}, LinkSurface::RepeatedNoun}); }),
            "ScopeEscape");

  const auto object = parse_en(
      "(S (NP#1 John) (TVP loves) (NP#2 Fatima))\n(S (NP#2 Fatima) (IVP smiles))\n");
  EXPECT_EQ(error_of([&] { fuse(object, {{0, {2}}, {1, {0}}, LinkSurface::RepeatedNoun}); }),
            "NotFusable");
}

TEST(Fuse, PreservesEntitiesAndWords) {
  testing::RandomTexts gen(5);
  int fused_count = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = gen.text(3, 2);
    for (const auto& l : t.links) {
      if (l.anaphor.sentence != l.referent.sentence + 1) continue;
      HybridText fused;
      try {
        fused = fuse(t, l);
      } catch (const Error&) {
        continue;
      }
      ++fused_count;
      EXPECT_EQ(class_profile(fused), class_profile(t));
      // yield: the anaphor's word is dropped and a relative pronoun appears
      auto expected = word_multiset(t);
      expected.erase(std::find(expected.begin(), expected.end(), *resolve(t, l.anaphor)->word));
      expected.push_back("who");
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(word_multiset(fused), expected);
      EXPECT_EQ(fused.sentences.size() + 1, t.sentences.size());
      // every anaphor keeps exactly one referent
      std::set<NpOccurrence> anaphors;
      for (const auto& fl : fused.links) EXPECT_TRUE(anaphors.insert(fl.anaphor).second);
    }
  }
  EXPECT_GT(fused_count, 50);
}

}  // namespace
}  // namespace textcirc
