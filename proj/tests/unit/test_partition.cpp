#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ruag/partition.hpp"

using namespace ruag;

namespace {

std::vector<std::size_t> exclusive_any(const PartitionedGrammar& pg, std::size_t rule) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < pg.assignments[rule].size(); ++a)
    if (pg.assignments[rule][a] != Assignment::shared) out.push_back(a);
  return out;
}

std::string uniform_rule(int n) {
  std::string src = "S ->";
  for (int i = 0; i < n; ++i) src += (i ? " | \"alt" : " \"alt") + std::to_string(i) + "\"";
  return src;
}

}  // namespace

TEST_CASE("shared prefix follows the cumulative-mass rule") {
  const Grammar g = parse_grammar(R"(S -> 30: "a" | 25: "b" | 20: "c" | 15: "d" | 10: "e")");
  PartitionConfig cfg;
  cfg.seed = 4;
  const PartitionedGrammar pg = partition(g, cfg);
  CHECK(pg.shared(0) == std::vector<std::size_t>{0});
  CHECK(exclusive_any(pg, 0) == std::vector<std::size_t>{1, 2, 3, 4});
}

TEST_CASE("sorting is by weight, ties keep rule order") {
  const Grammar g = parse_grammar(R"(S -> 1: "a" | 2: "b" | 2: "c" | 1: "d" | 1: "e" | 1: "f")");
  PartitionConfig cfg;
  cfg.p = 0.5;  // b (0.25) + c (0.25)
  const PartitionedGrammar pg = partition(g, cfg);
  CHECK(pg.shared(0) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("small rules stay shared unless marked @split") {
  const Grammar g = parse_grammar("S -> \"a\" A | \"b\" A\nA @split -> \"x\" | \"y\"\nB -> \"q\" | \"r\" | \"s\" | \"t\" | \"u\"\n");
  PartitionConfig cfg;
  const PartitionedGrammar pg = partition(g, cfg);
  CHECK(pg.shared(0).size() == 2);
  CHECK(pg.shared(1).size() == 1);
  CHECK(exclusive_any(pg, 1).size() == 1);

  const Grammar never = parse_grammar(R"(S @nosplit -> "a" | "b" | "c" | "d" | "e")");
  CHECK(partition(never, cfg).shared(0).size() == 5);
}

TEST_CASE("p = 0.99 on four uniform alternatives shares them all") {
  PartitionConfig cfg;
  cfg.p = 0.99;
  CHECK(partition(parse_grammar(uniform_rule(4)), cfg).shared(0).size() == 4);
}

TEST_CASE("config validation") {
  PartitionConfig cfg;
  cfg.p = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.p = 1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.p = 0.25;
  cfg.split_fractions = {0.7, 0.2, 0.2};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.split_fractions = {1.0, 0.0, 0.0};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("property: exclusivity, coverage, minimal prefix and determinism") {
  std::mt19937_64 gen(808);
  for (int i = 0; i < 150; ++i) {
    const Grammar g = parse_grammar(oracle::random_grammar_source(gen, 5, 8, 2));
    PartitionConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(i);
    cfg.p = 0.1 + 0.8 * static_cast<double>(i % 9) / 9.0;
    const PartitionedGrammar pg = partition(g, cfg);
    CHECK(write_manifest(pg) == write_manifest(partition(g, cfg)));
    for (std::size_t r = 0; r < g.rules().size(); ++r) {
      const Rule& rule = g.rule(r);
      std::set<std::size_t> seen;
      const auto shared = pg.shared(r);
      seen.insert(shared.begin(), shared.end());
      std::size_t total = shared.size();
      for (const Split s : kSplits) {
        const auto ex = pg.exclusive(r, s);
        for (auto a : ex) CHECK(seen.insert(a).second);
        total += ex.size();
      }
      CHECK(total == rule.alternatives.size());
      CHECK(seen.size() == rule.alternatives.size());
      REQUIRE_FALSE(shared.empty());
      if (shared.size() == rule.alternatives.size()) continue;
      double mass = 0.0, smallest = 1.0;
      for (auto a : shared) {
        mass += rule.probability(a);
        smallest = std::min(smallest, rule.probability(a));
      }
      CHECK(mass >= cfg.p - 1e-12);
      CHECK(mass - smallest < cfg.p);
    }
  }
}

TEST_CASE("ten uniform alternatives at p = 0.25: three shared, seven in exactly one split") {
  const Grammar g = parse_grammar(uniform_rule(10));
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    PartitionConfig cfg;
    cfg.seed = seed;
    const PartitionedGrammar pg = partition(g, cfg);
    std::array<std::set<std::string>, 3> langs;
    for (const Split s : kSplits) langs[static_cast<std::size_t>(s)] = oracle::language(pg.sub_grammar(s));
    int shared = 0, exclusive = 0;
    for (const auto& s : oracle::language(g)) {
      int in = 0;
      for (const auto& l : langs) in += static_cast<int>(l.count(s));
      if (in == 3) ++shared;
      if (in == 1) ++exclusive;
      CHECK((in == 1 || in == 3));
    }
    CHECK(shared == 3);
    CHECK(exclusive == 7);
  }
}

TEST_CASE("val-only strings never reach the train sub-language") {
  const Grammar g = parse_grammar("S -> \"q \" A | \"r \" A\nA -> 5: \"a\" | \"b\" | \"c\" | \"d\" | \"e\" | \"f\"\n");
  std::vector<std::vector<Assignment>> a = {
      {Assignment::shared, Assignment::shared},
      {Assignment::shared, Assignment::train, Assignment::val, Assignment::val, Assignment::test, Assignment::train}};
  const PartitionedGrammar pg = apply_assignments(g, a);
  const auto train = oracle::language(pg.sub_grammar(Split::train));
  const auto val = oracle::language(pg.sub_grammar(Split::val));
  CHECK(val == std::set<std::string>{"q a", "q c", "q d", "r a", "r c", "r d"});
  for (const char* s : {"q c", "q d", "r c", "r d"}) CHECK(train.count(s) == 0);
  const auto batches = emit_split_datasets(pg, {6, 6, 4}, 9);
  for (const auto& s : batches[0].utterances) CHECK(train.count(s) == 1);
  for (const auto& s : batches[1].utterances) CHECK(val.count(s) == 1);
}

TEST_CASE("sub-grammars prune rules that lost every alternative") {
  const Grammar g = parse_grammar("S -> \"x\" | \"y\" B\nB -> \"b\"\n");
  const PartitionedGrammar pg = apply_assignments(g, {{Assignment::shared, Assignment::train}, {Assignment::shared}});
  CHECK(pg.sub_grammar(Split::train).rules().size() == 2);
  CHECK(pg.sub_grammar(Split::val).rules().size() == 1);
  CHECK(oracle::language(pg.sub_grammar(Split::val)) == std::set<std::string>{"x"});
}

TEST_CASE("a split without the start symbol is an error") {
  const Grammar g = parse_grammar(R"(S -> "a" | "b")");
  try {
    apply_assignments(g, {{Assignment::train, Assignment::test}});
    FAIL("expected EmptySplitGrammar");
  } catch (const EmptySplitGrammar& e) {
    CHECK(e.split() == Split::val);
  }
}

TEST_CASE("emit_split_datasets on a shared-only grammar") {
  const PartitionedGrammar pg = partition(parse_grammar(R"(S -> "a" | "b")"), PartitionConfig{});
  const auto b = emit_split_datasets(pg, {1, 1, 1}, 3);
  for (const auto& batch : b) CHECK(batch.utterances.size() == 1);
}

TEST_CASE("manifest round trip reproduces identical sub-grammars") {
  const Grammar g = parse_grammar(fixtures::read(fixtures::data_path("grammars/pos.cfg")));
  PartitionConfig cfg;
  cfg.seed = 17;
  const PartitionedGrammar pg = partition(g, cfg);
  const std::string manifest = write_manifest(pg);
  CHECK(manifest.rfind("rule\talt_index\tassignment\n", 0) == 0);
  const PartitionedGrammar back = read_manifest(g, manifest);
  CHECK(back.assignments == pg.assignments);
  for (const Split s : kSplits) CHECK(serialize(back.sub_grammar(s)) == serialize(pg.sub_grammar(s)));
  CHECK(write_manifest(back) == manifest);
}

TEST_CASE("malformed manifests are rejected") {
  const Grammar g = parse_grammar(R"(S -> "a" | "b")");
  CHECK_THROWS(read_manifest(g, "rule\talt\tassignment\nS\t0\tshared\nS\t1\tshared\n"));
  CHECK_THROWS(read_manifest(g, "rule\talt_index\tassignment\nS\t0\tshared\n"));
  CHECK_THROWS(read_manifest(g, "rule\talt_index\tassignment\nS\t0\tshared\nS\t0\tshared\nS\t1\ttrain\n"));
  CHECK_THROWS(read_manifest(g, "rule\talt_index\tassignment\nS\t0\tshared\nS\t1\tholdout\n"));
  CHECK_THROWS(read_manifest(g, "rule\talt_index\tassignment\nS\t0\tshared\nT\t0\tshared\nS\t1\tshared\n"));
}
