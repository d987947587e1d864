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
 * @file generate.hpp
 *
 * The generative direction: sample circuits, write them out as text, and
 * check that the text compiles back to the circuit.
 *
 * Realization writes one sentence per top-level element, in list order.
 * Every box body must hold a single element, which is what the compiler
 * produces. Knobs in RealizationPolicy pick among the many texts of one
 * circuit.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "textcirc/circuit.hpp"
#include "textcirc/error.hpp"
#include "textcirc/fixture.hpp"
#include "textcirc/grammar.hpp"
#include "textcirc/hybrid.hpp"
#include "textcirc/lexicon.hpp"
#include "textcirc/text_circuit.hpp"

namespace textcirc {

struct SampleParams {
  int max_wires = 3;
  int max_elements = 4;
  /// Maximum nesting of boxes; 0 gives gates only.
  int max_depth = 2;
  /// Relative weight per kind; kinds left out weigh 1.
  std::map<ElementKind, double> kind_weights;
};

namespace detail {

/// Draws from a std::mt19937_64 by modulo so that results do not depend on
/// the standard library's distribution implementations.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  template <typename T>
  const T& pick(const std::vector<T>& from) { return from[below(from.size())]; }

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 rng_;
};

class Sampler {
 public:
  Sampler(std::uint64_t seed, const SampleParams& params, const Lexicon& lex)
      : draw_(seed), params_(params), lex_(lex) {}

  TextCircuit run() {
    auto nouns = sample_nouns();
    std::vector<int> all;
    for (int i = 1; i <= params_.max_wires; ++i) all.push_back(i);
    const std::size_t count = 1 + draw_.below(static_cast<std::size_t>(params_.max_elements));
    TextCircuit c;
    for (std::size_t i = 0; i < count; ++i) c.elements.push_back(sentence(params_.max_depth, all));
    std::set<int> used;
    for (const auto& e : c.elements) used.insert(e.wires.begin(), e.wires.end());
    for (int id : all) {
      if (used.count(id)) c.wires.push_back({id, nouns[static_cast<std::size_t>(id - 1)]});
    }
    return c;
  }

 private:
  std::vector<std::string> sample_nouns() {
    const auto& fw = function_words(Language::English);
    std::vector<std::string> pool;
    for (const auto& w : lex_.words(Symbol::NP, Language::English)) {
      if (w != fw.relative_pronoun && w != fw.subject_pronoun && w != fw.object_pronoun) {
        pool.push_back(w);
      }
    }
    std::vector<std::string> out;
    for (int i = 0; i < params_.max_wires; ++i) {
      const std::size_t k = draw_.below(pool.size());
      out.push_back(pool[k]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return out;
  }

  std::string label(ElementKind kind) {
    return draw_.pick(lex_.words(label_category(kind), Language::English));
  }

  double weight(ElementKind k) const {
    auto it = params_.kind_weights.find(k);
    return it == params_.kind_weights.end() ? 1.0 : it->second;
  }

  /// Weighted choice among `feasible`; nullopt when all weights are zero.
  std::optional<ElementKind> choose(const std::vector<ElementKind>& feasible) {
    double total = 0;
    for (auto k : feasible) total += weight(k);
    if (total <= 0) return std::nullopt;
    double x = draw_.unit() * total;
    for (auto k : feasible) {
      x -= weight(k);
      if (x < 0 && weight(k) > 0) return k;
    }
    for (auto it = feasible.rbegin(); it != feasible.rend(); ++it) {
      if (weight(*it) > 0) return *it;
    }
    return std::nullopt;
  }

  std::vector<int> two_distinct(const std::vector<int>& wires) {
    const std::size_t a = draw_.below(wires.size());
    std::size_t b = draw_.below(wires.size() - 1);
    if (b >= a) ++b;
    return {wires[a], wires[b]};
  }

  static std::vector<int> without(std::vector<int> wires, int w) {
    wires.erase(std::remove(wires.begin(), wires.end(), w), wires.end());
    return wires;
  }

  /// Something a sentence can say, on wires drawn from `wires`.
  Element sentence(int depth, const std::vector<int>& wires) {
    using K = ElementKind;
    const bool two = wires.size() >= 2;
    std::vector<K> feasible{K::Adjective, K::IntransitiveVerb};
    if (two) feasible.push_back(K::TransitiveVerb);
    if (depth > 0) {
      feasible.push_back(K::Adverb);
      if (two) feasible.push_back(K::Adposition);
      if (two) feasible.push_back(K::SententialComplement);
      feasible.push_back(K::Conjunction);
    }
    const auto kind = choose(feasible).value_or(K::IntransitiveVerb);
    switch (kind) {
      case K::Adjective: return Element::adjective(label(kind), draw_.pick(wires));
      case K::TransitiveVerb: {
        auto so = two_distinct(wires);
        return transitive(depth, so[0], so[1]);
      }
      case K::Adverb:
        if (two && draw_.below(2) == 0) {
          auto so = two_distinct(wires);
          return Element::adverb(label(kind), {transitive(depth - 1, so[0], so[1])});
        }
        return verb_phrase(depth, draw_.pick(wires), wires, K::Adverb);
      case K::Adposition:
      case K::SententialComplement:
        return verb_phrase(depth, draw_.pick(wires), wires, kind);
      case K::Conjunction: {
        Body left{sentence(depth - 1, wires)};
        Body right{sentence(depth - 1, wires)};
        return Element::conjunction(label(kind), std::move(left), std::move(right));
      }
      default: break;
    }
    return verb_phrase(depth, draw_.pick(wires), wires, K::IntransitiveVerb);
  }

  /// A verb phrase with subject `s`; other wires come from `wires`.
  Element verb_phrase(int depth, int s, const std::vector<int>& wires,
                      std::optional<ElementKind> forced = std::nullopt) {
    using K = ElementKind;
    const auto others = without(wires, s);
    K kind = K::IntransitiveVerb;
    if (forced) {
      kind = *forced;
    } else {
      std::vector<K> feasible{K::IntransitiveVerb};
      if (depth > 0) {
        feasible.push_back(K::Adverb);
        if (!others.empty()) {
          feasible.push_back(K::Adposition);
          feasible.push_back(K::SententialComplement);
        }
      }
      kind = choose(feasible).value_or(K::IntransitiveVerb);
    }
    switch (kind) {
      case K::Adverb:
        return Element::adverb(label(kind), {verb_phrase(depth - 1, s, wires)});
      case K::Adposition: {
        const int object = draw_.pick(others);
        return Element::adposition(label(kind), {verb_phrase(depth - 1, s, without(wires, object))},
                                   object);
      }
      case K::SententialComplement:
        return Element::complement(label(kind), s, {sentence(depth - 1, others)});
      default: break;
    }
    return Element::intransitive(label(K::IntransitiveVerb), s);
  }

  Element transitive(int depth, int s, int o) {
    using K = ElementKind;
    std::vector<K> feasible{K::TransitiveVerb};
    if (depth > 0) feasible.push_back(K::Adverb);
    if (choose(feasible).value_or(K::TransitiveVerb) == K::Adverb) {
      return Element::adverb(label(K::Adverb), {transitive(depth - 1, s, o)});
    }
    return Element::transitive(label(K::TransitiveVerb), s, o);
  }

  Draw draw_;
  const SampleParams& params_;
  const Lexicon& lex_;
};

}  // namespace detail

/**
 * A random well-formed circuit with English labels from `lex`, the same for
 * the same seed. Wires that no element touches are dropped.
 */
inline TextCircuit sample_circuit(std::uint64_t seed, const SampleParams& params,
                                  const Lexicon& lex = fixture_lexicon()) {
  auto invalid = [](const std::string& msg) { throw Error(ErrorCode::ParamsInvalid, msg); };
  if (params.max_wires < 1) invalid("max_wires must be at least 1");
  if (params.max_elements < 1) invalid("max_elements must be at least 1");
  if (params.max_depth < 0) invalid("max_depth must not be negative");
  double total = 0;
  for (auto [k, w] : params.kind_weights) {
    if (!(w >= 0)) invalid("weight of " + std::string(to_string(k)) + " is negative");
  }
  for (auto k : kAllElementKinds) {
    auto it = params.kind_weights.find(k);
    const double w = it == params.kind_weights.end() ? 1.0 : it->second;
    total += w;
    if (w > 0 && lex.words(label_category(k), Language::English).empty()) {
      invalid("lexicon has no " + std::string(to_string(label_category(k))) + " words for " +
              std::string(to_string(k)));
    }
  }
  if (total <= 0) invalid("all kind weights are zero");
  const auto& fw = function_words(Language::English);
  std::size_t nouns = 0;
  for (const auto& w : lex.words(Symbol::NP, Language::English)) {
    if (w != fw.relative_pronoun && w != fw.subject_pronoun && w != fw.object_pronoun) ++nouns;
  }
  if (static_cast<std::size_t>(params.max_wires) > nouns) {
    invalid("max_wires exceeds the " + std::to_string(nouns) + " nouns in the lexicon");
  }
  return detail::Sampler(seed, params, lex).run();
}

struct RealizationPolicy {
  /// A repeated mention at most this many sentences after the previous one
  /// becomes a pronoun; 0 never uses pronouns.
  int pronoun_threshold = 0;
  /// Fold a sentence into the next one as a relative clause where possible.
  bool fuse = false;
  /// Put top-level adjectives in front of the next mention of their noun
  /// instead of writing a copular sentence.
  bool prenominal_adjectives = false;
};

namespace detail {

inline bool is_ivp_like(const Element& e) {
  switch (e.kind) {
    case ElementKind::IntransitiveVerb:
    case ElementKind::Adposition:
    case ElementKind::SententialComplement: return true;
    case ElementKind::Adverb: return e.bodies.size() == 1 && e.bodies[0].size() == 1 &&
                                     is_ivp_like(e.bodies[0][0]);
    default: return false;
  }
}

inline bool is_tvp_like(const Element& e) {
  if (e.kind == ElementKind::TransitiveVerb) return true;
  return e.kind == ElementKind::Adverb && e.bodies.size() == 1 && e.bodies[0].size() == 1 &&
         is_tvp_like(e.bodies[0][0]);
}

class Realizer {
 public:
  Realizer(const TextCircuit& c, Language lang, const Lexicon& lex)
      : circuit_(c), lang_(lang), lex_(lex), table_(GeneratorTable::for_language(lang)) {
    for (std::size_t i = 0; i < c.wires.size(); ++i) {
      entity_[c.wires[i].id] = static_cast<int>(i) + 1;
      noun_[c.wires[i].id] = c.wires[i].noun;
      if (!lex.lookup(c.wires[i].noun, Symbol::NP, direction_from(lang))) {
        throw Error(ErrorCode::VocabularyViolation,
                    "noun '" + c.wires[i].noun + "' is not in the " +
                        std::string(to_string(lang)) + " lexicon");
      }
    }
  }

  SyntaxTree sentence(const Element& e) {
    if (e.kind == ElementKind::Adjective) {
      return node(RuleId::AdjectivePost,
                  {np(e.wires[0]), SyntaxTree::leaf(Symbol::COP, function_words(lang_).copula),
                   word(Symbol::ADJ, e)});
    }
    if (e.kind == ElementKind::Conjunction) {
      return node(RuleId::Conjunction,
                  {sentence(only(e, 0)), word(Symbol::CNJ, e), sentence(only(e, 1))});
    }
    if (is_tvp_like(e)) {
      const Element* core = &e;
      while (core->kind == ElementKind::Adverb) core = &core->bodies[0][0];
      return node(RuleId::TransVerb, {np(core->wires[0]), verb_tvp(e), np(core->wires[1])});
    }
    if (is_ivp_like(e)) return node(RuleId::IntransVerb, {np(e.wires[0]), verb_ivp(e)});
    throw unrealizable(e, "cannot head a sentence");
  }

 private:
  SyntaxTree node(RuleId rule, std::vector<SyntaxTree> canonical) {
    const Generator* g = table_.find(rule);
    SyntaxTree out;
    out.label = g->lhs;
    for (std::size_t slot : g->slots) out.children.push_back(std::move(canonical[slot]));
    return out;
  }

  SyntaxTree np(int wire) {
    return SyntaxTree::leaf(Symbol::NP, noun_.at(wire), entity_.at(wire));
  }

  SyntaxTree word(Symbol category, const Element& e) {
    const Symbol lexical = label_category(e.kind);
    if (!lex_.lookup(e.label, lexical, direction_from(lang_))) {
      throw Error(ErrorCode::VocabularyViolation,
                  std::string(to_string(e.kind)) + " label '" + e.label + "' is not in the " +
                      std::string(to_string(lang_)) + " lexicon");
    }
    return SyntaxTree::leaf(category, e.label);
  }

  static Error unrealizable(const Element& e, const std::string& why) {
    return Error(ErrorCode::Unrealizable,
                 std::string(to_string(e.kind)) + " '" + e.label + "' " + why);
  }

  const Element& only(const Element& e, std::size_t body) {
    if (e.bodies.size() <= body || e.bodies[body].size() != 1) {
      throw unrealizable(e, "needs exactly one element per body");
    }
    return e.bodies[body][0];
  }

  SyntaxTree verb_ivp(const Element& e) {
    switch (e.kind) {
      case ElementKind::IntransitiveVerb: return word(Symbol::IVP, e);
      case ElementKind::Adverb: {
        const Element& inner = only(e, 0);
        if (!is_ivp_like(inner)) throw unrealizable(e, "modifies a non-verb phrase");
        return node(RuleId::AdverbIV, {word(Symbol::ADV, e), verb_ivp(inner)});
      }
      case ElementKind::Adposition: {
        const Element& inner = only(e, 0);
        if (!is_ivp_like(inner) || inner.wires[0] != e.wires[0]) {
          throw unrealizable(e, "must wrap a verb phrase of its subject");
        }
        return node(RuleId::AdpositionIV, {verb_ivp(inner), word(Symbol::ADP, e), np(e.wires.back())});
      }
      case ElementKind::SententialComplement:
        return node(RuleId::SentCompVerb, {word(Symbol::SCV, e), sentence(only(e, 0))});
      default: break;
    }
    throw unrealizable(e, "is not a verb phrase");
  }

  SyntaxTree verb_tvp(const Element& e) {
    if (e.kind == ElementKind::TransitiveVerb) return word(Symbol::TVP, e);
    return node(RuleId::AdverbTV, {word(Symbol::ADV, e), verb_tvp(only(e, 0))});
  }

  const TextCircuit& circuit_;
  Language lang_;
  const Lexicon& lex_;
  const GeneratorTable& table_;
  std::map<int, int> entity_;
  std::map<int, std::string> noun_;
};

/// Grammatical position of the NP leaf at `path`: true for objects.
inline bool object_position(const SyntaxTree& tree, TreePath path, const GeneratorTable& table) {
  while (!path.empty()) {
    const std::size_t last = path.back();
    path.pop_back();
    const SyntaxTree* parent = at_path(tree, path);
    const Generator* g = match_rule(*parent, table);
    const std::size_t slot = g->slots[last];
    switch (g->rule) {
      case RuleId::TransVerb:
      case RuleId::AdpositionIV: return slot == 2;
      case RuleId::AdjectivePre:
      case RuleId::Relative: continue;
      default: return false;
    }
  }
  return false;
}

/// Moves each top-level adjective onto the next element that mentions its
/// wire; the returned map holds, per element, the adjectives to attach.
inline std::vector<std::map<int, std::vector<std::string>>> hoist_adjectives(
    std::vector<Element>& elements) {
  std::vector<std::map<int, std::vector<std::string>>> attach(elements.size());
  std::vector<bool> drop(elements.size(), false);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].kind != ElementKind::Adjective) continue;
    const int w = elements[i].wires[0];
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      const auto& wires = elements[j].wires;
      if (std::find(wires.begin(), wires.end(), w) == wires.end()) continue;
      if (elements[j].kind != ElementKind::Adjective) {
        attach[j][w].push_back(elements[i].label);
        drop[i] = true;
      }
      break;
    }
  }
  std::vector<Element> kept;
  std::vector<std::map<int, std::vector<std::string>>> kept_attach;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (drop[i]) continue;
    kept.push_back(elements[i]);
    kept_attach.push_back(std::move(attach[i]));
  }
  elements = std::move(kept);
  return kept_attach;
}

}  // namespace detail

/**
 * Writes a circuit as hybrid text in `lang`. Labels and nouns must already
 * be words of that language in `lex` (use map_labels to move a circuit
 * between languages).
 */
inline HybridText circuit_to_text(const TextCircuit& circuit, Language lang,
                                  const RealizationPolicy& policy = {},
                                  const Lexicon& lex = fixture_lexicon()) {
  check_well_formed(circuit);
  {
    std::set<int> used;
    for (const auto& e : circuit.elements) used.insert(e.wires.begin(), e.wires.end());
    for (const auto& w : circuit.wires) {
      if (!used.count(w.id)) {
        throw Error(ErrorCode::Unrealizable, "wire " + std::to_string(w.id) + " ('" + w.noun +
                                                 "') is never acted on");
      }
    }
  }
  const auto& table = GeneratorTable::for_language(lang);
  const auto& fw = function_words(lang);
  detail::Realizer realizer(circuit, lang, lex);

  std::vector<Element> elements = circuit.elements;
  std::vector<std::map<int, std::vector<std::string>>> adjectives(elements.size());
  if (policy.prenominal_adjectives) adjectives = detail::hoist_adjectives(elements);

  HybridText text;
  text.language = lang;
  std::map<int, NpOccurrence> last_mention;
  std::map<int, std::size_t> last_sentence;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    SyntaxTree s = realizer.sentence(elements[k]);
    // first mention of each wire in canonical order
    std::vector<std::pair<int, TreePath>> mentions;
    visit_canonical(s, table, [&](const SyntaxTree& node, const TreePath& path) {
      if (node.is_leaf() && node.label == Symbol::NP) mentions.emplace_back(*node.entity, path);
    });
    std::set<TreePath> adorned;
    for (auto& [wire_entity, adjs] : adjectives[k]) {
      const int entity = static_cast<int>(*circuit.position_of(wire_entity)) + 1;
      auto it = std::find_if(mentions.begin(), mentions.end(),
                             [&](const auto& m) { return m.first == entity; });
      SyntaxTree* leaf = at_path(s, it->second);
      SyntaxTree wrapped = *leaf;
      for (const auto& a : adjs) {
        std::vector<SyntaxTree> canon{SyntaxTree::leaf(Symbol::ADJ, a), std::move(wrapped)};
        const Generator* g = table.find(RuleId::AdjectivePre);
        SyntaxTree n;
        n.label = Symbol::NP;
        for (std::size_t slot : g->slots) n.children.push_back(canon[slot]);
        wrapped = std::move(n);
      }
      *leaf = std::move(wrapped);
      adorned.insert(it->second);
    }
    mentions.clear();
    visit_canonical(s, table, [&](const SyntaxTree& node, const TreePath& path) {
      if (node.is_leaf() && node.label == Symbol::NP) mentions.emplace_back(*node.entity, path);
    });
    std::vector<std::pair<TreePath, PronominalLink>> links;
    for (const auto& [entity, path] : mentions) {
      NpOccurrence here{k, path};
      auto prev = last_mention.find(entity);
      if (prev != last_mention.end()) {
        const std::size_t distance = k - last_sentence.at(entity);
        TreePath parent_path = path;
        bool under_adjective = false;
        if (!parent_path.empty()) {
          parent_path.pop_back();
          const Generator* g = match_rule(*at_path(s, parent_path), table);
          under_adjective = g != nullptr && g->rule == RuleId::AdjectivePre;
        }
        const bool pronoun = policy.pronoun_threshold > 0 && !under_adjective &&
                             distance <= static_cast<std::size_t>(policy.pronoun_threshold);
        if (pronoun) {
          at_path(s, path)->word =
              detail::object_position(s, path, table) ? fw.object_pronoun : fw.subject_pronoun;
        }
        text.links.push_back({prev->second, here,
                              pronoun ? LinkSurface::Pronoun : LinkSurface::RepeatedNoun});
      }
      last_mention[entity] = here;
      last_sentence[entity] = k;
    }
    text.sentences.push_back(std::move(s));
  }

  if (policy.fuse) {
    std::size_t i = 0;
    while (i + 1 < text.sentences.size()) {
      const Generator* root = match_rule(text.sentences[i], table);
      std::optional<PronominalLink> candidate;
      if (root != nullptr && root->canonical_rhs()[0] == Symbol::NP) {
        const NpOccurrence subject{i, {root->surface_of(0)}};
        for (const auto& l : text.links) {
          if (l.referent == subject && l.anaphor.sentence == i + 1) {
            candidate = l;
            break;
          }
        }
      }
      if (candidate) {
        try {
          text = fuse(text, *candidate);
          continue;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotFusable && e.code() != ErrorCode::ScopeEscape) throw;
        }
      }
      ++i;
    }
  }
  return text;
}

struct RoundtripReport {
  bool ok = false;
  HybridText text;
  std::string expected;
  std::string actual;
};

/// Realizes, recompiles and compares canonical forms.
inline RoundtripReport roundtrip(const TextCircuit& circuit, Language lang,
                                 const RealizationPolicy& policy = {},
                                 const Lexicon& lex = fixture_lexicon()) {
  RoundtripReport report;
  report.text = circuit_to_text(circuit, lang, policy, lex);
  report.expected = canonicalize(circuit);
  report.actual = canonicalize(compile_text(report.text));
  report.ok = report.expected == report.actual;
  return report;
}

}  // namespace textcirc
