#pragma once

// Reference implementations used only by tests. They are written against the
// grammar's plain data (rules, alternatives, symbol names) and share no code
// with the library's counting, sampling or recognition paths.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ruag/grammar.hpp"

namespace oracle {

// Every derivation of `name`, as a string, by plain recursion. Derivations
// that happen to spell the same string appear once per derivation.
inline std::vector<std::string> derivations(const ruag::Grammar& g, const std::string& name,
                                            std::map<std::string, std::vector<std::string>>& memo) {
  if (auto it = memo.find(name); it != memo.end()) return it->second;
  std::vector<std::string> out;
  const ruag::Rule* rule = nullptr;
  for (const auto& r : g.rules())
    if (r.name == name) rule = &r;
  for (const auto& alt : rule->alternatives) {
    std::vector<std::string> partial{""};
    for (const auto& sym : alt.production.symbols) {
      std::vector<std::string> pieces;
      if (sym.kind == ruag::Symbol::Kind::terminal)
        pieces = {sym.value};
      else
        pieces = derivations(g, sym.value, memo);
      std::vector<std::string> next;
      for (const auto& p : partial)
        for (const auto& q : pieces) next.push_back(p + q);
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  memo[name] = out;
  return out;
}

inline std::vector<std::string> derivations(const ruag::Grammar& g) {
  std::map<std::string, std::vector<std::string>> memo;
  return derivations(g, g.rules().front().name, memo);
}

inline std::set<std::string> language(const ruag::Grammar& g) {
  const auto d = derivations(g);
  return {d.begin(), d.end()};
}

// Probability of each string under weighted top-down sampling.
inline std::map<std::string, double> string_probabilities(const ruag::Grammar& g, const std::string& name,
                                                          std::map<std::string, std::map<std::string, double>>& memo) {
  if (auto it = memo.find(name); it != memo.end()) return it->second;
  const ruag::Rule* rule = nullptr;
  for (const auto& r : g.rules())
    if (r.name == name) rule = &r;
  double total = 0.0;
  for (const auto& alt : rule->alternatives) total += alt.weight;
  std::map<std::string, double> out;
  for (const auto& alt : rule->alternatives) {
    std::map<std::string, double> partial{{"", alt.weight / total}};
    for (const auto& sym : alt.production.symbols) {
      std::map<std::string, double> pieces;
      if (sym.kind == ruag::Symbol::Kind::terminal)
        pieces = {{sym.value, 1.0}};
      else
        pieces = string_probabilities(g, sym.value, memo);
      std::map<std::string, double> next;
      for (const auto& [p, pp] : partial)
        for (const auto& [q, qp] : pieces) next[p + q] += pp * qp;
      partial = std::move(next);
    }
    for (const auto& [s, p] : partial) out[s] += p;
  }
  memo[name] = out;
  return out;
}

inline std::map<std::string, double> string_probabilities(const ruag::Grammar& g) {
  std::map<std::string, std::map<std::string, double>> memo;
  return string_probabilities(g, g.rules().front().name, memo);
}

// DSL text for a random acyclic grammar: rule Ri only references Rj with
// j > i, terminals come from a tiny alphabet so that different derivations
// often spell the same string.
inline std::string random_grammar_source(std::mt19937_64& gen, int max_rules = 5, int max_alts = 4,
                                         int max_symbols = 3) {
  static const char* const kTerminals[] = {"a", "b", "ab", " ", "", "ba"};
  std::uniform_int_distribution<int> rules_dist(1, max_rules);
  const int rules = rules_dist(gen);
  std::string src;
  for (int i = 0; i < rules; ++i) {
    src += "R" + std::to_string(i) + " ->";
    std::uniform_int_distribution<int> alts_dist(1, max_alts);
    const int alts = alts_dist(gen);
    for (int a = 0; a < alts; ++a) {
      if (a > 0) src += " |";
      std::uniform_int_distribution<int> w(1, 4);
      src += " " + std::to_string(w(gen)) + ":";
      std::uniform_int_distribution<int> len_dist(1, max_symbols);
      const int len = len_dist(gen);
      for (int s = 0; s < len; ++s) {
        std::uniform_int_distribution<int> coin(0, 2);
        if (i + 1 < rules && coin(gen) == 0) {
          std::uniform_int_distribution<int> target(i + 1, rules - 1);
          src += " R" + std::to_string(target(gen));
        } else {
          std::uniform_int_distribution<int> t(0, 5);
          src += std::string(" \"") + kTerminals[t(gen)] + "\"";
        }
      }
    }
    src += "\n";
  }
  return src;
}

}  // namespace oracle
