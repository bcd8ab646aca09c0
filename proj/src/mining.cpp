#include "ruag/mining.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ruag/rng.hpp"
#include "ruag/tfidf.hpp"

namespace ruag {

std::string_view mining_method_name(MiningMethod m) {
  return m == MiningMethod::random ? "random" : "tfidf_weighted";
}

NotEnoughCandidates::NotEnoughCandidates(std::size_t available, std::size_t requested)
    : Error("only " + std::to_string(available) + " candidates have a non-zero score, " +
            std::to_string(requested) + " requested"),
      available_(available) {}

std::vector<double> tfidf_scores(std::span<const CorpusUtterance> corpus, std::span<const std::string> positives,
                                 ScoreAggregation aggregation) {
  std::vector<std::string> docs;
  docs.reserve(corpus.size() + positives.size());
  for (const auto& c : corpus) docs.push_back(c.text);
  docs.insert(docs.end(), positives.begin(), positives.end());
  const Vocabulary vocab = fit_tfidf(docs);

  // Inverted index over the positives: feature -> (positive, weight).
  std::vector<std::vector<std::pair<std::uint32_t, double>>> postings(vocab.size());
  for (std::size_t p = 0; p < positives.size(); ++p)
    for (const auto& [f, w] : vocab.vectorize(positives[p]).entries)
      postings[f].emplace_back(static_cast<std::uint32_t>(p), w);

  std::vector<double> scores(corpus.size(), 0.0);
  std::vector<double> sims(positives.size(), 0.0);
  std::vector<std::uint32_t> touched;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    touched.clear();
    for (const auto& [f, w] : vocab.vectorize(corpus[i].text).entries) {
      for (const auto& [p, pw] : postings[f]) {
        if (sims[p] == 0.0) touched.push_back(p);
        sims[p] += w * pw;
      }
    }
    double agg = 0.0;
    for (std::uint32_t p : touched) {
      const double s = std::max(0.0, sims[p]);
      if (aggregation == ScoreAggregation::max)
        agg = std::max(agg, s);
      else
        agg += s;
      sims[p] = 0.0;
    }
    if (aggregation == ScoreAggregation::mean && !positives.empty()) agg /= static_cast<double>(positives.size());
    scores[i] = agg;
  }
  return scores;
}

MinedNegatives mine_negatives(std::span<const CorpusUtterance> corpus, std::span<const std::string> positives,
                              std::size_t n, MiningMethod method, std::uint64_t seed,
                              ScoreAggregation aggregation) {
  if (corpus.empty()) throw std::invalid_argument("corpus is empty");
  if (n > corpus.size()) throw std::invalid_argument("cannot mine more utterances than the corpus holds");
  MinedNegatives out;
  out.method = method;
  Rng rng(derive_seed(seed, "mine"));

  if (method == MiningMethod::random) {
    std::vector<std::size_t> idx(corpus.size());
    std::iota(idx.begin(), idx.end(), 0);
    // Partial Fisher-Yates: the first n slots become the sample.
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(corpus.size() - i));
      std::swap(idx[i], idx[j]);
      out.utterances.push_back({corpus[idx[i]].text, corpus[idx[i]].source, std::nullopt});
    }
    return out;
  }

  if (positives.empty()) throw std::invalid_argument("weighted mining needs positive examples");
  const auto scores = tfidf_scores(corpus, positives, aggregation);
  std::vector<std::pair<double, std::size_t>> keys;
  keys.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    // Every item consumes one draw so keys do not depend on earlier scores.
    const double u = rng.uniform_open_zero();
    if (scores[i] > 0.0) keys.emplace_back(-std::log(u) / scores[i], i);
  }
  if (keys.size() < n) throw NotEnoughCandidates(keys.size(), n);
  std::partial_sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(n), keys.end());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& c = corpus[keys[k].second];
    out.utterances.push_back({c.text, c.source, scores[keys[k].second]});
  }
  return out;
}

}  // namespace ruag
