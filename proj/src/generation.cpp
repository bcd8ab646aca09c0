#include "ruag/generation.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace ruag {

ExhaustedLanguage::ExhaustedLanguage(SampleBatch partial, std::size_t requested)
    : Error("language exhausted: found " + std::to_string(partial.utterances.size()) +
            " distinct strings, requested " + std::to_string(requested)),
      partial_(std::move(partial)),
      requested_(requested) {}

NameCollision::NameCollision(std::string name)
    : Error("rule name '" + name + "' already exists"), name_(std::move(name)) {}

std::string grammar_id(const Grammar& g) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(serialize(g))));
  return buf;
}

Sampler::Sampler(const Grammar& g) : grammar_(g) {
  cumulative_.reserve(g.rules().size());
  for (const Rule& r : g.rules()) {
    std::vector<double> cum;
    cum.reserve(r.alternatives.size());
    double total = 0.0;
    for (const auto& alt : r.alternatives) {
      total += alt.weight;
      cum.push_back(total);
    }
    cumulative_.push_back(std::move(cum));
  }
}

std::size_t Sampler::pick(Rng& rng, std::size_t rule) const {
  const auto& cum = cumulative_[rule];
  if (cum.size() == 1) return 0;
  const double x = rng.uniform() * cum.back();
  auto it = std::upper_bound(cum.begin(), cum.end(), x);
  if (it == cum.end()) --it;
  return static_cast<std::size_t>(it - cum.begin());
}

void Sampler::draw_into(Rng& rng, std::size_t rule, std::string& out) const {
  const Alternative& alt = grammar_.rule(rule).alternatives[pick(rng, rule)];
  for (const Symbol& s : alt.production.symbols) {
    if (s.is_terminal())
      out += s.value;
    else
      draw_into(rng, s.rule, out);
  }
}

std::string Sampler::draw(Rng& rng) const {
  std::string out;
  draw_into(rng, grammar_.start(), out);
  return out;
}

SampleBatch sample(const Grammar& g, std::size_t n, std::uint64_t seed, bool dedup,
                   std::size_t max_attempts) {
  if (n == 0) throw std::invalid_argument("sample count must be at least 1");
  SampleBatch batch{{}, grammar_id(g), seed, dedup};
  batch.utterances.reserve(n);
  Sampler sampler(g);
  Rng rng(seed);
  if (!dedup) {
    for (std::size_t i = 0; i < n; ++i) batch.utterances.push_back(sampler.draw(rng));
    return batch;
  }
  if (max_attempts == 0) max_attempts = 50 * n;
  std::unordered_set<std::string> seen;
  for (std::size_t attempt = 0; attempt < max_attempts && batch.utterances.size() < n; ++attempt) {
    std::string s = sampler.draw(rng);
    if (seen.insert(s).second) batch.utterances.push_back(std::move(s));
  }
  if (batch.utterances.size() < n) throw ExhaustedLanguage(std::move(batch), n);
  return batch;
}

GrammarStats estimate_unique_strings(const Grammar& g, std::size_t sample_n, std::uint64_t seed) {
  if (sample_n == 0) throw std::invalid_argument("sample_n must be at least 1");
  Sampler sampler(g);
  Rng rng(seed);
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < sample_n; ++i) seen.insert(sampler.draw(rng));
  return {count_derivations(g), seen.size(), sample_n};
}

// ---------------------------------------------------------------------------
// Modifiers

ModifierSpec ModifierSpec::with_default_weights(std::string target,
                                                const std::vector<std::string>& variants) {
  ModifierSpec spec;
  spec.target = std::move(target);
  for (const auto& v : variants) spec.variants.emplace_back(v, 1.0);
  return spec;
}

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string derived_rule_name(std::string_view target) {
  std::string name = "Mod_";
  for (char c : target) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    name.push_back(ok ? c : '_');
  }
  return name;
}

void validate(const ModifierSpec& spec) {
  if (spec.target.empty()) throw std::invalid_argument("modifier target is empty");
  if (std::any_of(spec.target.begin(), spec.target.end(), is_ws))
    throw std::invalid_argument("modifier target must be a single token");
  if (spec.variants.empty()) throw std::invalid_argument("modifier needs at least one variant");
  if (!(spec.original_weight > 0.0)) throw std::invalid_argument("original weight must be positive");
  for (const auto& [text, w] : spec.variants) {
    if (!(w > 0.0)) throw std::invalid_argument("variant weights must be positive");
    if (!(spec.original_weight > w))
      throw std::invalid_argument("original weight must exceed every variant weight");
    if (text == spec.target) throw std::invalid_argument("variant equals the target");
  }
}

// Splits a terminal at every whitespace-delimited occurrence of target.
// Returns false when the terminal does not contain the token.
bool rewrite_terminal(const std::string& text, const std::string& target, const std::string& rule,
                      std::vector<Symbol>& out, std::size_t& hits) {
  bool found = false;
  std::string pending;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_ws(text[i])) {
      pending.push_back(text[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_ws(text[j])) ++j;
    if (text.compare(i, j - i, target) == 0) {
      found = true;
      ++hits;
      if (!pending.empty()) out.push_back(Symbol::terminal(std::move(pending)));
      pending.clear();
      out.push_back(Symbol::nonterminal(rule));
    } else {
      pending.append(text, i, j - i);
    }
    i = j;
  }
  if (!pending.empty()) out.push_back(Symbol::terminal(std::move(pending)));
  return found;
}

}  // namespace

ModifierResult apply_modifier(const Grammar& g, const ModifierSpec& spec) {
  validate(spec);
  const std::string name = spec.rule_name.empty() ? derived_rule_name(spec.target) : spec.rule_name;
  if (g.find(name)) throw NameCollision(name);

  std::vector<Rule> rules = g.rules();
  std::size_t hits = 0;
  for (Rule& r : rules) {
    for (Alternative& alt : r.alternatives) {
      std::vector<Symbol> rewritten;
      for (const Symbol& s : alt.production.symbols) {
        std::vector<Symbol> pieces;
        if (s.is_terminal() && rewrite_terminal(s.value, spec.target, name, pieces, hits))
          rewritten.insert(rewritten.end(), pieces.begin(), pieces.end());
        else
          rewritten.push_back(s);
      }
      alt.production.symbols = std::move(rewritten);
    }
  }
  if (hits == 0) {
    return {g, name, 0, {"modifier target '" + spec.target + "' not found in any terminal"}};
  }
  Rule mod{name, {}, SplitMode::never};
  mod.alternatives.push_back({Production{{Symbol::terminal(spec.target)}}, spec.original_weight});
  for (const auto& [text, w] : spec.variants)
    mod.alternatives.push_back({Production{{Symbol::terminal(text)}}, w});
  rules.push_back(std::move(mod));
  return {Grammar(std::move(rules), g.start_symbol()), name, hits, {}};
}

}  // namespace ruag
