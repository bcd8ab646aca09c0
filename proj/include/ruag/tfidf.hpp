#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ruag/error.hpp"

namespace ruag {

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("corpus is empty") {}
};

/// Sparse vector as (feature index, weight) pairs sorted by index.
struct TfIdfVector {
  std::vector<std::pair<std::uint32_t, double>> entries;

  bool empty() const { return entries.empty(); }
  double norm() const;
  bool operator==(const TfIdfVector&) const = default;
};

double dot(const TfIdfVector& a, const TfIdfVector& b);
/// Exact euclidean distance, summed over the union of indices.
double squared_distance(const TfIdfVector& a, const TfIdfVector& b);

/// Token vocabulary with document frequencies. Indices are dense and follow
/// first appearance in the fitting corpus.
class Vocabulary {
 public:
  Vocabulary() = default;

  std::size_t size() const { return tokens_.size(); }
  std::size_t document_count() const { return documents_; }
  const std::string& token(std::uint32_t i) const { return tokens_[i]; }
  std::uint32_t document_frequency(std::uint32_t i) const { return df_[i]; }
  /// -1 when absent.
  std::int64_t find(std::string_view token) const;

  /// ln((1 + N) / (1 + df)) + 1
  double idf(std::uint32_t i) const;

  /// term_count * idf over known tokens, then L2-normalized. Inputs made
  /// only of unknown tokens give the zero vector.
  TfIdfVector vectorize(std::string_view text) const;
  TfIdfVector vectorize_tokens(std::span<const std::string> tokens) const;

  /// Rebuilds a vocabulary from stored (token, df) pairs.
  static Vocabulary from_counts(std::vector<std::pair<std::string, std::uint32_t>> tokens,
                                std::size_t document_count);

  bool operator==(const Vocabulary& o) const {
    return tokens_ == o.tokens_ && df_ == o.df_ && documents_ == o.documents_;
  }

 private:
  friend Vocabulary fit_tfidf(std::span<const std::string> documents);

  std::vector<std::string> tokens_;
  std::vector<std::uint32_t> df_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::size_t documents_ = 0;
};

/// Fits document frequencies over the given documents. Throws EmptyCorpus.
Vocabulary fit_tfidf(std::span<const std::string> documents);

}  // namespace ruag
