#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ruag/error.hpp"

namespace ruag {

enum class MiningMethod : std::uint8_t { random, tfidf_weighted };

/// How a candidate's similarities to the positives are combined.
enum class ScoreAggregation : std::uint8_t { max, mean, sum };

std::string_view mining_method_name(MiningMethod m);

struct CorpusUtterance {
  std::string text;
  std::string source;
};

struct MinedUtterance {
  std::string text;
  std::string source;
  /// Present only for tfidf_weighted mining.
  std::optional<double> score;
};

struct MinedNegatives {
  std::vector<MinedUtterance> utterances;
  MiningMethod method = MiningMethod::random;
};

class NotEnoughCandidates : public Error {
 public:
  NotEnoughCandidates(std::size_t available, std::size_t requested);
  std::size_t available() const { return available_; }

 private:
  std::size_t available_;
};

/// Similarity of each corpus utterance to the positives: cosine of L2-normed
/// TF-IDF vectors (vocabulary fitted on corpus and positives together),
/// aggregated over positives. Indexed like corpus.
std::vector<double> tfidf_scores(std::span<const CorpusUtterance> corpus, std::span<const std::string> positives,
                                 ScoreAggregation aggregation = ScoreAggregation::max);

/// Samples n corpus utterances without replacement.
///  - random: uniform.
///  - tfidf_weighted: probability proportional to tfidf_scores(), using the
///    exponential-key method (key = -ln(u) / score, keep the n smallest).
///    Zero-score utterances are never chosen; throws NotEnoughCandidates when
///    fewer than n have a positive score.
/// Output is in selection order. Throws std::invalid_argument when the corpus
/// is empty or n exceeds its size.
MinedNegatives mine_negatives(std::span<const CorpusUtterance> corpus, std::span<const std::string> positives,
                              std::size_t n, MiningMethod method, std::uint64_t seed,
                              ScoreAggregation aggregation = ScoreAggregation::max);

}  // namespace ruag
