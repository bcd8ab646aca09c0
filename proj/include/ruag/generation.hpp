#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ruag/grammar.hpp"
#include "ruag/rng.hpp"

namespace ruag {

struct SampleBatch {
  std::vector<std::string> utterances;
  std::string grammar_id;
  std::uint64_t seed = 0;
  bool dedup = false;
};

class ExhaustedLanguage : public Error {
 public:
  ExhaustedLanguage(SampleBatch partial, std::size_t requested);
  std::size_t found() const { return partial_.utterances.size(); }
  std::size_t requested() const { return requested_; }
  /// Every distinct string drawn before giving up.
  const SampleBatch& partial() const { return partial_; }

 private:
  SampleBatch partial_;
  std::size_t requested_;
};

/// Stable identifier for a grammar: FNV-1a of its serialized form, in hex.
std::string grammar_id(const Grammar& g);

/// Draws strings top-down, choosing each rule's alternative with probability
/// proportional to its weight. Holds a reference to the grammar.
class Sampler {
 public:
  explicit Sampler(const Grammar& g);

  std::string draw(Rng& rng) const;
  void draw_into(Rng& rng, std::size_t rule, std::string& out) const;

 private:
  std::size_t pick(Rng& rng, std::size_t rule) const;

  const Grammar& grammar_;
  std::vector<std::vector<double>> cumulative_;
};

/// Draws n strings. With dedup, rejection-samples until n distinct strings are
/// found or max_attempts draws were made (0 means 50*n), and throws
/// ExhaustedLanguage carrying the distinct strings found so far otherwise.
SampleBatch sample(const Grammar& g, std::size_t n, std::uint64_t seed, bool dedup,
                   std::size_t max_attempts = 0);

/// Reports the exact derivation count and the number of distinct strings in
/// sample_n weighted draws.
GrammarStats estimate_unique_strings(const Grammar& g, std::size_t sample_n, std::uint64_t seed);

/// Rewrites a whitespace-delimited token inside terminals into a new
/// probabilistic non-terminal (typos, spelling variants).
struct ModifierSpec {
  std::string target;
  std::vector<std::pair<std::string, double>> variants;
  /// Must exceed every variant weight so the original stays most probable.
  double original_weight = 8.0;
  /// Name of the generated rule; derived from target when empty.
  std::string rule_name;

  /// Variants at weight 1 against the original at 8.
  static ModifierSpec with_default_weights(std::string target, const std::vector<std::string>& variants);
};

class NameCollision : public Error {
 public:
  explicit NameCollision(std::string name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct ModifierResult {
  Grammar grammar;
  std::string rule_name;
  std::size_t rewritten_tokens = 0;
  /// Non-fatal diagnostics such as "target not found".
  std::vector<std::string> warnings;
};

/// The rewritten grammar keeps every untouched terminal identical. When the
/// target occurs nowhere the input grammar is returned unchanged with a
/// warning. Throws std::invalid_argument for a malformed spec.
ModifierResult apply_modifier(const Grammar& g, const ModifierSpec& spec);

}  // namespace ruag
