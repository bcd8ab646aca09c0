#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "ruag/dataset.hpp"
#include "ruag/grammar.hpp"
#include "ruag/mining.hpp"
#include "ruag/partition.hpp"

namespace ruag {

/// Label counts for a full dataset. Each count is divided across splits by
/// split_fractions, with rounding remainders going to the last split.
struct DatasetPlan {
  std::size_t pos = 2720;
  std::size_t aic = 680;
  std::size_t neg_grammar = 1360;
  std::size_t neg_tfidf = 1360;
  std::size_t neg_random = 680;
  PartitionConfig partition;
  /// When false, grammar rows are sampled from the whole grammar and dealt to
  /// splits at random, so every split shares one distribution.
  bool intra_rule_partition = true;

  /// Same proportions scaled to roughly `total` rows.
  DatasetPlan scaled_to(std::size_t total) const;
  std::size_t total() const { return pos + aic + neg_grammar + neg_tfidf + neg_random; }
};

std::array<std::size_t, 3> split_counts(std::size_t n, const std::array<double, 3>& fractions);

/// Returns true when a mined candidate really is a negative. Stands in for the
/// manual check of mined rows.
using ReviewFn = std::function<bool(const std::string&)>;

struct AssembledDataset {
  Dataset dataset;
  PartitionedGrammar pos;
  PartitionedGrammar aic;
  PartitionedGrammar neg;
  /// Mined candidates the review rejected.
  std::size_t rejected = 0;
};

/// POS, AIC and grammar negatives are sampled from each grammar's own split
/// sub-grammar. Corpus negatives are mined (TF-IDF weighted against the POS
/// training rows, then uniformly from what is left), passed through review
/// and dealt to splits after a seeded shuffle. Every random choice derives
/// from seed.
AssembledDataset assemble_dataset(const Grammar& pos, const Grammar& aic, const Grammar& neg,
                                  std::span<const CorpusUtterance> corpus, const DatasetPlan& plan,
                                  std::uint64_t seed, const ReviewFn& review = {});

}  // namespace ruag
