#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ruag/generation.hpp"
#include "ruag/grammar.hpp"
#include "ruag/labels.hpp"

namespace ruag {

enum class Split : std::uint8_t { train = 0, val = 1, test = 2 };
inline constexpr std::array<Split, 3> kSplits = {Split::train, Split::val, Split::test};

std::string_view split_name(Split s);
SplitTag to_split_tag(Split s);

enum class Assignment : std::uint8_t { shared, train, val, test };

std::string_view assignment_name(Assignment a);
Assignment exclusive_to(Split s);

struct PartitionConfig {
  /// Probability mass of the top alternatives duplicated into every split.
  double p = 0.25;
  std::array<double, 3> split_fractions = {0.70, 0.15, 0.15};
  /// Rules with fewer alternatives (and no @split annotation) stay shared.
  std::size_t min_alternatives_to_split = 4;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when p is outside (0,1) or the fractions
  /// are non-positive or do not sum to 1 within 1e-9.
  void validate() const;
};

class EmptySplitGrammar : public Error {
 public:
  explicit EmptySplitGrammar(Split split);
  Split split() const { return split_; }

 private:
  Split split_;
};

/// Intra-rule partition of a grammar. assignments[r][a] tells where the a-th
/// alternative of rule r goes; the three sub-grammars keep shared
/// alternatives plus their own exclusive ones, pruned of rules that became
/// unproductive or unreachable.
struct PartitionedGrammar {
  Grammar source;
  std::vector<std::vector<Assignment>> assignments;
  std::array<Grammar, 3> sub_grammars;

  const Grammar& sub_grammar(Split s) const { return sub_grammars[static_cast<std::size_t>(s)]; }
  std::vector<std::size_t> shared(std::size_t rule) const;
  std::vector<std::size_t> exclusive(std::size_t rule, Split s) const;
};

/// Per rule: duplicate the shortest weight-sorted prefix whose cumulative
/// probability reaches p (ties keep rule order), then assign each remaining
/// alternative to a split by a seeded draw over split_fractions.
PartitionedGrammar partition(const Grammar& g, const PartitionConfig& cfg);

/// Builds the three sub-grammars from explicit assignments. Throws
/// EmptySplitGrammar when a split loses its start symbol.
PartitionedGrammar apply_assignments(const Grammar& g, std::vector<std::vector<Assignment>> assignments);

/// Samples each sub-grammar independently with dedup, using per-split
/// sub-seeds derived from seed. Indexed by Split.
std::array<SampleBatch, 3> emit_split_datasets(const PartitionedGrammar& pg,
                                               const std::array<std::size_t, 3>& counts,
                                               std::uint64_t seed);

/// Manifest TSV: header `rule<TAB>alt_index<TAB>assignment`, then one row per
/// alternative in grammar order.
std::string write_manifest(const PartitionedGrammar& pg);

/// Rebuilds a partition of g from a manifest. Every alternative must be
/// listed exactly once.
PartitionedGrammar read_manifest(const Grammar& g, std::string_view manifest);

}  // namespace ruag
