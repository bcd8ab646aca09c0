#include "ruag/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace ruag {

std::string_view split_name(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::val: return "val";
    case Split::test: return "test";
  }
  return "train";
}

SplitTag to_split_tag(Split s) {
  switch (s) {
    case Split::train: return SplitTag::train;
    case Split::val: return SplitTag::val;
    case Split::test: return SplitTag::test;
  }
  return SplitTag::none;
}

std::string_view assignment_name(Assignment a) {
  switch (a) {
    case Assignment::shared: return "shared";
    case Assignment::train: return "train";
    case Assignment::val: return "val";
    case Assignment::test: return "test";
  }
  return "shared";
}

Assignment exclusive_to(Split s) { return static_cast<Assignment>(static_cast<int>(s) + 1); }

void PartitionConfig::validate() const {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0, 1)");
  double sum = 0.0;
  for (double f : split_fractions) {
    if (!(f > 0.0)) throw std::invalid_argument("split fractions must be positive");
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("split fractions must sum to 1");
}

EmptySplitGrammar::EmptySplitGrammar(Split split)
    : Error("the " + std::string(split_name(split)) + " sub-grammar lost its start symbol"),
      split_(split) {}

std::vector<std::size_t> PartitionedGrammar::shared(std::size_t rule) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < assignments[rule].size(); ++a)
    if (assignments[rule][a] == Assignment::shared) out.push_back(a);
  return out;
}

std::vector<std::size_t> PartitionedGrammar::exclusive(std::size_t rule, Split s) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < assignments[rule].size(); ++a)
    if (assignments[rule][a] == exclusive_to(s)) out.push_back(a);
  return out;
}

namespace {

// Float slack for the cumulative-mass comparison, so that e.g. four uniform
// alternatives reach p = 0.75 at the third one.
constexpr double kMassSlack = 1e-12;

bool keeps(Assignment a, Split s) { return a == Assignment::shared || a == exclusive_to(s); }

std::optional<Grammar> build_sub_grammar(const Grammar& g,
                                         const std::vector<std::vector<Assignment>>& assignments,
                                         Split split) {
  const std::size_t n = g.rules().size();
  // Productive rules, computed bottom-up; an alternative survives when it is
  // kept for this split and references only productive rules.
  std::vector<bool> productive(n, false);
  for (std::size_t r : g.topological_order()) {
    const Rule& rule = g.rule(r);
    for (std::size_t a = 0; a < rule.alternatives.size() && !productive[r]; ++a) {
      if (!keeps(assignments[r][a], split)) continue;
      const auto& syms = rule.alternatives[a].production.symbols;
      productive[r] = std::all_of(syms.begin(), syms.end(),
                                  [&](const Symbol& s) { return s.is_terminal() || productive[s.rule]; });
    }
  }
  if (!productive[g.start()]) return std::nullopt;

  auto alive = [&](std::size_t r, std::size_t a) {
    if (!keeps(assignments[r][a], split)) return false;
    const auto& syms = g.rule(r).alternatives[a].production.symbols;
    return std::all_of(syms.begin(), syms.end(),
                       [&](const Symbol& s) { return s.is_terminal() || productive[s.rule]; });
  };

  std::vector<bool> reachable(n, false);
  std::vector<std::size_t> stack{g.start()};
  reachable[g.start()] = true;
  while (!stack.empty()) {
    const std::size_t r = stack.back();
    stack.pop_back();
    const Rule& rule = g.rule(r);
    for (std::size_t a = 0; a < rule.alternatives.size(); ++a) {
      if (!alive(r, a)) continue;
      for (const Symbol& s : rule.alternatives[a].production.symbols) {
        if (s.is_terminal() || reachable[s.rule]) continue;
        reachable[s.rule] = true;
        stack.push_back(s.rule);
      }
    }
  }

  std::vector<Rule> rules;
  for (std::size_t r = 0; r < n; ++r) {
    if (!reachable[r]) continue;
    const Rule& src = g.rule(r);
    Rule out{src.name, {}, src.split};
    for (std::size_t a = 0; a < src.alternatives.size(); ++a)
      if (alive(r, a)) out.alternatives.push_back(src.alternatives[a]);
    rules.push_back(std::move(out));
  }
  return Grammar(std::move(rules), g.start_symbol());
}

bool splittable(const Rule& r, const PartitionConfig& cfg) {
  switch (r.split) {
    case SplitMode::always: return r.alternatives.size() >= 2;
    case SplitMode::never: return false;
    case SplitMode::automatic: return r.alternatives.size() >= cfg.min_alternatives_to_split;
  }
  return false;
}

}  // namespace

PartitionedGrammar apply_assignments(const Grammar& g, std::vector<std::vector<Assignment>> assignments) {
  if (assignments.size() != g.rules().size())
    throw std::invalid_argument("assignment table does not match the grammar");
  for (std::size_t r = 0; r < assignments.size(); ++r)
    if (assignments[r].size() != g.rule(r).alternatives.size())
      throw std::invalid_argument("assignment table does not match rule '" + g.rule(r).name + "'");

  std::array<std::optional<Grammar>, 3> subs;
  for (Split s : kSplits) {
    subs[static_cast<std::size_t>(s)] = build_sub_grammar(g, assignments, s);
    if (!subs[static_cast<std::size_t>(s)]) throw EmptySplitGrammar(s);
  }
  return {g, std::move(assignments), {std::move(*subs[0]), std::move(*subs[1]), std::move(*subs[2])}};
}

PartitionedGrammar partition(const Grammar& g, const PartitionConfig& cfg) {
  cfg.validate();
  std::vector<std::vector<Assignment>> assignments;
  assignments.reserve(g.rules().size());
  const std::uint64_t base = derive_seed(cfg.seed, "partition");
  for (const Rule& rule : g.rules()) {
    std::vector<Assignment> row(rule.alternatives.size(), Assignment::shared);
    if (splittable(rule, cfg)) {
      std::vector<std::size_t> order(rule.alternatives.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rule.alternatives[a].weight > rule.alternatives[b].weight;
      });
      // Each rule draws from its own stream so that editing one rule does not
      // reshuffle the others.
      Rng rng(derive_seed(base, rule.name));
      double mass = 0.0;
      std::size_t k = 0;
      for (; k < order.size() && mass < cfg.p - kMassSlack; ++k) mass += rule.probability(order[k]);
      for (; k < order.size(); ++k) {
        const double u = rng.uniform();
        double acc = 0.0;
        Split chosen = Split::test;
        for (Split s : kSplits) {
          acc += cfg.split_fractions[static_cast<std::size_t>(s)];
          if (u < acc) {
            chosen = s;
            break;
          }
        }
        row[order[k]] = exclusive_to(chosen);
      }
    }
    assignments.push_back(std::move(row));
  }
  return apply_assignments(g, std::move(assignments));
}

std::array<SampleBatch, 3> emit_split_datasets(const PartitionedGrammar& pg,
                                               const std::array<std::size_t, 3>& counts,
                                               std::uint64_t seed) {
  std::array<SampleBatch, 3> out;
  for (Split s : kSplits) {
    const auto i = static_cast<std::size_t>(s);
    out[i] = sample(pg.sub_grammars[i], counts[i], derive_seed(seed, split_name(s)), true);
  }
  return out;
}

std::string write_manifest(const PartitionedGrammar& pg) {
  std::string out = "rule\talt_index\tassignment\n";
  for (std::size_t r = 0; r < pg.assignments.size(); ++r) {
    for (std::size_t a = 0; a < pg.assignments[r].size(); ++a) {
      out += pg.source.rule(r).name;
      out += '\t';
      out += std::to_string(a);
      out += '\t';
      out += assignment_name(pg.assignments[r][a]);
      out += '\n';
    }
  }
  return out;
}

PartitionedGrammar read_manifest(const Grammar& g, std::string_view manifest) {
  std::vector<std::vector<std::optional<Assignment>>> table(g.rules().size());
  for (std::size_t r = 0; r < table.size(); ++r) table[r].resize(g.rule(r).alternatives.size());
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t r = 0; r < g.rules().size(); ++r) index.emplace(g.rule(r).name, r);

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < manifest.size()) {
    std::size_t eol = manifest.find('\n', pos);
    if (eol == std::string_view::npos) eol = manifest.size();
    std::string_view line = manifest.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "rule\talt_index\tassignment")
        throw std::invalid_argument("manifest header must be 'rule<TAB>alt_index<TAB>assignment'");
      continue;
    }
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    auto fail = [&](const std::string& why) {
      return std::invalid_argument("manifest line " + std::to_string(line_no) + ": " + why);
    };
    if (t2 == std::string_view::npos) throw fail("expected three columns");
    const std::string name(line.substr(0, t1));
    const std::string idx(line.substr(t1 + 1, t2 - t1 - 1));
    const std::string_view what = line.substr(t2 + 1);
    auto it = index.find(name);
    if (it == index.end()) throw fail("unknown rule '" + name + "'");
    std::size_t a = 0;
    try {
      std::size_t used = 0;
      a = std::stoul(idx, &used);
      if (used != idx.size()) throw std::invalid_argument(idx);
    } catch (const std::exception&) {
      throw fail("bad alternative index '" + idx + "'");
    }
    if (a >= table[it->second].size()) throw fail("alternative index out of range");
    std::optional<Assignment> asg;
    for (Assignment cand : {Assignment::shared, Assignment::train, Assignment::val, Assignment::test})
      if (assignment_name(cand) == what) asg = cand;
    if (!asg) throw fail("unknown assignment '" + std::string(what) + "'");
    if (table[it->second][a]) throw fail("alternative listed twice");
    table[it->second][a] = asg;
  }

  std::vector<std::vector<Assignment>> assignments(table.size());
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (std::size_t a = 0; a < table[r].size(); ++a) {
      if (!table[r][a])
        throw std::invalid_argument("manifest does not cover alternative " + std::to_string(a) +
                                    " of rule '" + g.rule(r).name + "'");
      assignments[r].push_back(*table[r][a]);
    }
  }
  return apply_assignments(g, std::move(assignments));
}

}  // namespace ruag
