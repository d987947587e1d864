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

// Command-line front end: compile, translate, equiv, sample, roundtrip.
//
// Exit codes: 0 success, 1 semantic failure (circuits differ, a round trip
// fails), 2 usage, input or format error.

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "textcirc/textcirc.hpp"

namespace {

using nlohmann::json;
using namespace textcirc;

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kUsageError = 2;

/// An input problem tied to a file.
struct InputError {
  std::string file;
  Error error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path, Error(ErrorCode::FormatError, "cannot open file")};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError{path, Error(ErrorCode::FormatError, "cannot write file")};
  out << content;
}

template <typename Fn>
auto with_file(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw InputError{path, e};
  }
}

Language parse_lang(const std::string& s) { return s == "ur" ? Language::Urdu : Language::English; }

Lexicon load_lexicon(const std::string& path) {
  if (path.empty()) return fixture_lexicon();
  const std::string content = read_file(path);
  return with_file(path, [&] { return parse_lexicon(content); });
}

HybridText load_text(const std::string& path, Language lang) {
  const std::string content = read_file(path);
  return with_file(path, [&] { return parse_hybrid_text(content, lang); });
}

bool use_color() {
  const char* env = std::getenv("TEXTCIRC_COLOR");
  const std::string mode = env ? env : "auto";
  if (mode == "always") return true;
  if (mode == "never") return false;
  return isatty(STDOUT_FILENO) != 0;
}

struct Options {
  bool structured = false;
  std::string lexicon;
  // compile
  std::string input;
  std::string lang = "en";
  std::string out;
  std::string render = "none";
  // translate
  std::string dir = "e2u";
  // equiv
  std::string english;
  std::string urdu;
  // sample and roundtrip
  std::uint64_t seed = 0;
  std::size_t count = 100;
  SampleParams params;
  RealizationPolicy policy;
};

int cmd_compile(const Options& o) {
  const HybridText text = load_text(o.input, parse_lang(o.lang));
  const TextCircuit circuit =
      with_file(o.input, [&] { return canonical_circuit(compile_text(text)); });
  const std::string serial = serialize_circuit(circuit);
  if (!o.out.empty()) write_output(o.out, serial);
  std::string picture;
  if (o.render == "dot") picture = render_dot(circuit);
  if (o.render == "ascii") picture = render_ascii(circuit, !o.structured && use_color());
  if (o.structured) {
    json j{{"circuit", serial},
           {"wires", circuit.wires.size()},
           {"elements", total_elements(circuit.elements)}};
    if (o.render != "none") j["render"] = picture;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  if (o.out.empty()) std::cout << serial;
  std::cout << picture;
  return kOk;
}

int cmd_translate(const Options& o) {
  const Direction dir = o.dir == "u2e" ? Direction::UrduToEnglish : Direction::EnglishToUrdu;
  const Lexicon lex = load_lexicon(o.lexicon);
  const HybridText text = load_text(o.input, source_language(dir));
  const std::string out =
      with_file(o.input, [&] { return serialize_hybrid_text(translate_text(text, lex, dir)); });
  if (!o.out.empty()) write_output(o.out, out);
  if (o.structured) {
    std::cout << json{{"text", out}}.dump(2) << "\n";
  } else if (o.out.empty()) {
    std::cout << out;
  }
  return kOk;
}

int cmd_equiv(const Options& o) {
  const Lexicon lex = load_lexicon(o.lexicon);
  const HybridText en = load_text(o.english, Language::English);
  const HybridText ur = load_text(o.urdu, Language::Urdu);
  const TextCircuit ce = with_file(o.english, [&] { return compile_text(en); });
  const TextCircuit cu = with_file(o.urdu, [&] { return compile_text(ur); });
  const std::string left =
      with_file(o.english, [&] { return canonicalize(map_labels(ce, lex, Direction::EnglishToUrdu)); });
  const std::string right = canonicalize(cu);
  const bool equal = left == right;
  if (o.structured) {
    std::cout << json{{"equal", equal}, {"english_translated", left}, {"urdu", right}}.dump(2)
              << "\n";
  } else if (equal) {
    std::cout << "equal\n" << right;
  } else {
    std::cout << "circuits differ\n--- " << o.english << " (translated)\n"
              << left << "+++ " << o.urdu << "\n"
              << right;
  }
  return equal ? kOk : kSemanticFailure;
}

TextCircuit in_language(const TextCircuit& c, Language lang, const Lexicon& lex) {
  return lang == Language::English ? c : map_labels(c, lex, Direction::EnglishToUrdu);
}

int cmd_sample(const Options& o) {
  const Lexicon lex = load_lexicon(o.lexicon);
  const Language lang = parse_lang(o.lang);
  const TextCircuit circuit = in_language(sample_circuit(o.seed, o.params, lex), lang, lex);
  const HybridText text = circuit_to_text(circuit, lang, o.policy, lex);
  const std::string serial = serialize_circuit(circuit);
  const std::string body = serialize_hybrid_text(text);
  if (o.structured) {
    json sentences = json::array();
    for (const auto& s : text.sentences) sentences.push_back(linearize(s));
    std::cout << json{{"seed", o.seed}, {"circuit", serial}, {"text", body},
                      {"sentences", sentences}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "# circuit\n";
  std::istringstream lines(serial);
  for (std::string line; std::getline(lines, line);) std::cout << "# " << line << "\n";
  for (const auto& s : text.sentences) std::cout << "# " << linearize(s) << "\n";
  std::cout << body;
  return kOk;
}

int cmd_roundtrip(const Options& o) {
  const Lexicon lex = load_lexicon(o.lexicon);
  const Language lang = parse_lang(o.lang);
  std::size_t ok = 0;
  std::optional<std::pair<std::uint64_t, RoundtripReport>> first_failure;
  std::optional<std::pair<std::uint64_t, std::string>> first_error;
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::uint64_t seed = o.seed + i;
    try {
      const TextCircuit circuit = in_language(sample_circuit(seed, o.params, lex), lang, lex);
      auto report = roundtrip(circuit, lang, o.policy, lex);
      if (report.ok) {
        ++ok;
      } else if (!first_failure) {
        first_failure.emplace(seed, std::move(report));
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParamsInvalid) throw;
      if (!first_error) first_error.emplace(seed, e.what());
    }
  }
  const std::size_t failed = o.count - ok;
  if (o.structured) {
    json j{{"count", o.count}, {"ok", ok}, {"failed", failed}};
    if (first_failure) {
      j["counterexample"] = {{"seed", first_failure->first},
                             {"expected", first_failure->second.expected},
                             {"actual", first_failure->second.actual},
                             {"text", serialize_hybrid_text(first_failure->second.text)}};
    }
    if (first_error) j["error"] = {{"seed", first_error->first}, {"message", first_error->second}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "ok " << ok << " failed " << failed << " of " << o.count << "\n";
    if (first_failure) {
      const auto& r = first_failure->second;
      std::cout << "first counterexample: seed " << first_failure->first << "\n"
                << "expected\n" << r.expected << "actual\n" << r.actual << "text\n"
                << serialize_hybrid_text(r.text);
    }
    if (first_error) {
      std::cout << "first error: seed " << first_error->first << ": " << first_error->second
                << "\n";
    }
  }
  return failed == 0 ? kOk : kSemanticFailure;
}

void add_generation_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--wires", o.params.max_wires, "Maximum number of noun wires")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--elements", o.params.max_elements, "Maximum number of top-level elements")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--depth", o.params.max_depth, "Maximum box nesting")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--lang", o.lang, "Output language")->check(CLI::IsMember({"en", "ur"}));
  cmd->add_option("--pronoun-threshold", o.policy.pronoun_threshold,
                  "Use a pronoun for a mention at most this many sentences after the previous "
                  "one (0: never)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--fuse", o.policy.fuse, "Fold sentences into relative clauses where possible");
  cmd->add_flag("--prenominal", o.policy.prenominal_adjectives,
                "Write adjectives before nouns instead of as copular sentences");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile English and Urdu hybrid-grammar texts to text circuits"};
  app.require_subcommand(1);
  Options o;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--lexicon", o.lexicon, "Tab-separated lexicon (default: bundled)");

  auto* compile = app.add_subcommand("compile", "Compile a text file to a circuit");
  compile->add_option("text", o.input, "Hybrid-text file")->required();
  compile->add_option("--lang", o.lang, "Language of the text")
      ->check(CLI::IsMember({"en", "ur"}));
  compile->add_option("--out", o.out, "Write the circuit to this file");
  compile->add_option("--render", o.render, "Picture to print")
      ->check(CLI::IsMember({"dot", "ascii", "none"}));

  auto* translate = app.add_subcommand("translate", "Translate a text file");
  translate->add_option("text", o.input, "Hybrid-text file")->required();
  translate->add_option("--dir", o.dir, "Direction")->check(CLI::IsMember({"e2u", "u2e"}));
  translate->add_option("--out", o.out, "Write the translation to this file");

  auto* equiv = app.add_subcommand("equiv", "Check an English and an Urdu text for equal circuits");
  equiv->add_option("english", o.english, "English text file")->required();
  equiv->add_option("urdu", o.urdu, "Urdu text file")->required();

  auto* sample = app.add_subcommand("sample", "Sample a circuit and write it as text");
  add_generation_flags(sample, o);

  auto* trip = app.add_subcommand("roundtrip", "Sample, realize and recompile many circuits");
  add_generation_flags(trip, o);
  trip->add_option("--count", o.count, "Number of trials");

  for (auto* cmd : {translate, equiv, sample, trip}) {
    cmd->add_option("--lexicon", o.lexicon, "Tab-separated lexicon (default: bundled)");
  }
  for (auto* cmd : {compile, translate, equiv, sample, trip}) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }
  o.structured = format == "structured";

  try {
    if (*compile) return cmd_compile(o);
    if (*translate) return cmd_translate(o);
    if (*equiv) return cmd_equiv(o);
    if (*sample) return cmd_sample(o);
    if (*trip) return cmd_roundtrip(o);
  } catch (const InputError& e) {
    std::cerr << e.file;
    if (e.error.line() != 0) std::cerr << ":" << e.error.line() << ":" << e.error.column();
    std::cerr << ": " << to_string(e.error.code()) << ": " << e.error.message() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
