#include <cmath>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ruag/generation.hpp"
#include "ruag/recognizer.hpp"

using namespace ruag;

TEST_CASE("toy grammar with n=12 and dedup yields its whole language") {
  const Grammar g = parse_grammar(fixtures::kToyGrammar);
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    const SampleBatch b = sample(g, 12, seed, true);
    const std::set<std::string> got(b.utterances.begin(), b.utterances.end());
    CHECK(b.utterances.size() == 12);
    CHECK(got == oracle::language(g));
    CHECK(b.dedup);
    CHECK(b.seed == seed);
  }
}

TEST_CASE("sampling without dedup repeats") {
  const SampleBatch b = sample(parse_grammar(R"(S -> "a")"), 3, 5, false);
  CHECK(b.utterances == std::vector<std::string>{"a", "a", "a"});
}

TEST_CASE("n = 0 is rejected") {
  CHECK_THROWS_AS(sample(parse_grammar(R"(S -> "a")"), 0, 1, false), std::invalid_argument);
}

TEST_CASE("dedup beyond the language size throws with the partial batch") {
  const Grammar g = parse_grammar(fixtures::kToyGrammar);
  try {
    sample(g, 13, 3, true);
    FAIL("expected ExhaustedLanguage");
  } catch (const ExhaustedLanguage& e) {
    CHECK(e.requested() == 13);
    CHECK(e.found() == 12);
    const auto& u = e.partial().utterances;
    CHECK(std::set<std::string>(u.begin(), u.end()).size() == 12);
  }
  CHECK_THROWS_AS(sample(g, 12, 3, true, 5), ExhaustedLanguage);
}

TEST_CASE("sampling is deterministic per seed") {
  const Grammar g = parse_grammar(fixtures::read(fixtures::data_path("grammars/pos.cfg")));
  CHECK(sample(g, 200, 42, false).utterances == sample(g, 200, 42, false).utterances);
  CHECK(sample(g, 200, 42, false).utterances != sample(g, 200, 43, false).utterances);
  CHECK(sample(g, 5, 1, true).grammar_id == grammar_id(g));
}

TEST_CASE("3:1 weights give a 0.75 frequency and pass a chi-square test") {
  const Grammar g = parse_grammar(R"(S -> 3: "robot" | 1: "chatbot")");
  const SampleBatch b = sample(g, 40000, 12345, false);
  const auto robots = static_cast<double>(std::count(b.utterances.begin(), b.utterances.end(), "robot"));
  const double freq = robots / 40000.0;
  CHECK(freq >= 0.74);
  CHECK(freq <= 0.76);
  const double e1 = 30000.0, e2 = 10000.0;
  const double chi2 = (robots - e1) * (robots - e1) / e1 + (40000.0 - robots - e2) * (40000.0 - robots - e2) / e2;
  CHECK(chi2 < 10.828);  // 1 degree of freedom, alpha = 0.001
}

TEST_CASE("property: sampled strings follow the weighted string distribution") {
  std::mt19937_64 gen(31);
  for (int i = 0; i < 10; ++i) {
    const Grammar g = parse_grammar(oracle::random_grammar_source(gen, 4, 3, 2));
    const auto probs = oracle::string_probabilities(g);
    const SampleBatch b = sample(g, 20000, 100 + i, false);
    std::map<std::string, double> freq;
    for (const auto& s : b.utterances) freq[s] += 1.0 / 20000.0;
    for (const auto& [s, f] : freq) REQUIRE(probs.count(s) == 1);
    for (const auto& [s, p] : probs) {
      const double sigma = std::sqrt(p * (1.0 - p) / 20000.0);
      CHECK(std::abs(freq[s] - p) <= 5.0 * sigma + 1e-12);
    }
  }
}

TEST_CASE("property: every sample is recognized by its grammar") {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 40; ++i) {
    const Grammar g = parse_grammar(oracle::random_grammar_source(gen));
    for (const auto& s : sample(g, 250, i, false).utterances) REQUIRE(member(g, s));
  }
}

TEST_CASE("estimate_unique_strings") {
  const Grammar toy = parse_grammar(fixtures::kToyGrammar);
  const GrammarStats s = estimate_unique_strings(toy, 10000, 8);
  CHECK(s.derivation_count == 12);
  CHECK(s.estimated_unique_strings == 12);
  CHECK(s.sample_size == 10000);
  const GrammarStats one = estimate_unique_strings(parse_grammar(R"(S -> "a")"), 5, 1);
  CHECK(one.estimated_unique_strings == 1);
  const GrammarStats again = estimate_unique_strings(toy, 10000, 8);
  CHECK(again.estimated_unique_strings == s.estimated_unique_strings);
  // Ambiguous grammar: 2 derivations, 1 string.
  const GrammarStats amb = estimate_unique_strings(parse_grammar(R"(S -> "a" | "a")"), 100, 1);
  CHECK(amb.derivation_count == 2);
  CHECK(amb.estimated_unique_strings == 1);
}

TEST_CASE("modifier rewrites a token into weighted variants") {
  const Grammar g = parse_grammar(R"(S -> "is their dog")");
  const ModifierResult r = apply_modifier(g, ModifierSpec::with_default_weights("their", {"there", "they're"}));
  CHECK(r.warnings.empty());
  CHECK(r.rewritten_tokens == 1);
  CHECK(oracle::language(r.grammar) == std::set<std::string>{"is their dog", "is there dog", "is they're dog"});
  CHECK(count_derivations(r.grammar) == 3 * count_derivations(g));
  const auto probs = oracle::string_probabilities(r.grammar);
  CHECK(probs.at("is their dog") == doctest::Approx(0.8));
  CHECK(probs.at("is there dog") == doctest::Approx(0.1));
  const Rule& mod = r.grammar.rule(r.rule_name);
  CHECK(mod.split == SplitMode::never);
}

TEST_CASE("modifier only touches whole tokens and leaves other terminals identical") {
  const Grammar g = parse_grammar(R"(S -> "their" " " A | "theirs is " A
A -> "blue" | "not their car" | "")");
  const ModifierResult r = apply_modifier(g, ModifierSpec::with_default_weights("their", {"there"}));
  CHECK(r.rewritten_tokens == 2);
  std::set<std::string> expected;
  for (const auto& s : oracle::language(g)) {
    expected.insert(s);
    // Replace each whole-token "their" independently.
    std::vector<std::string> variants{""};
    std::size_t i = 0;
    while (i <= s.size()) {
      std::size_t j = s.find(' ', i);
      if (j == std::string::npos) j = s.size();
      const std::string tok = s.substr(i, j - i);
      std::vector<std::string> next;
      for (const auto& v : variants) {
        const std::string sep = j < s.size() ? " " : "";
        next.push_back(v + tok + sep);
        if (tok == "their") next.push_back(v + "there" + sep);
      }
      variants = std::move(next);
      i = j + 1;
    }
    expected.insert(variants.begin(), variants.end());
  }
  CHECK(oracle::language(r.grammar) == expected);
}

TEST_CASE("property: modifier changes the language only at target tokens") {
  std::mt19937_64 gen(77);
  for (int i = 0; i < 100; ++i) {
    const Grammar g = parse_grammar(oracle::random_grammar_source(gen));
    if (count_derivations(g) > 5000) continue;
    const ModifierResult r = apply_modifier(g, ModifierSpec::with_default_weights("ab", {"zz"}));
    std::set<std::string> mapped;
    for (const auto& s : oracle::language(r.grammar)) {
      std::string back = s;
      for (std::size_t p = back.find("zz"); p != std::string::npos; p = back.find("zz", p + 2)) back.replace(p, 2, "ab");
      mapped.insert(back);
    }
    CHECK(mapped == oracle::language(g));
    if (r.rewritten_tokens == 0) {
      CHECK(serialize(r.grammar) == serialize(g));
      CHECK(r.warnings.size() == 1);
    }
  }
}

TEST_CASE("modifier errors") {
  const Grammar g = parse_grammar(R"(S -> "is their dog"
Mod_their -> "x")");
  CHECK_THROWS_AS(apply_modifier(g, ModifierSpec::with_default_weights("their", {"there"})), NameCollision);
  ModifierSpec heavy = ModifierSpec::with_default_weights("their", {"there"});
  heavy.rule_name = "Typos";
  heavy.variants[0].second = 8.0;
  CHECK_THROWS_AS(apply_modifier(g, heavy), std::invalid_argument);
  const ModifierResult missing = apply_modifier(g, ModifierSpec::with_default_weights("cat", {"kat"}));
  CHECK(missing.warnings.size() == 1);
  CHECK(serialize(missing.grammar) == serialize(g));
}
