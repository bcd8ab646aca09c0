#include "ruag/random_guess.hpp"

#include <cmath>
#include <stdexcept>

#include "ruag/rng.hpp"
#include "ruag/tfidf.hpp"

namespace ruag {

namespace {

void check_distribution(const ClassScores& d) {
  double sum = 0.0;
  for (double p : d) {
    if (!(p >= 0.0)) throw std::invalid_argument("label probabilities must be non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("label probabilities must sum to 1");
}

Label draw(const ClassScores& d, Rng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    acc += d[c];
    if (u < acc) return kLabels[c];
  }
  // Rounding left u above the last cumulative value: take the last class
  // with non-zero mass.
  for (std::size_t c = kNumLabels; c-- > 0;)
    if (d[c] > 0.0) return kLabels[c];
  return Label::neg;
}

Prediction one_hot(std::string text, Label label) {
  Prediction p{std::move(text), label, {}};
  p.scores[index_of(label)] = 1.0;
  return p;
}

}  // namespace

RandomGuessModel fit_random_guess(std::span<const LabeledUtterance> train, std::uint64_t seed) {
  if (train.empty()) throw EmptyCorpus();
  RandomGuessModel m;
  m.seed = seed;
  for (const auto& u : train) m.distribution[index_of(u.label)] += 1.0;
  for (double& p : m.distribution) p /= static_cast<double>(train.size());
  return m;
}

std::vector<Label> predict_random(const ClassScores& distribution, std::uint64_t seed, std::size_t n) {
  check_distribution(distribution);
  Rng rng(seed);
  std::vector<Label> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(draw(distribution, rng));
  return out;
}

Prediction RandomGuessClassifier::predict(std::string_view text) const {
  check_distribution(model_.distribution);
  Rng rng(derive_seed(model_.seed, text));
  return one_hot(std::string(text), draw(model_.distribution, rng));
}

std::vector<Prediction> RandomGuessClassifier::predict_all(std::span<const std::string> texts) const {
  // Key the stream on the batch too, so equal-length splits get different draws.
  std::uint64_t key = model_.seed;
  for (const auto& t : texts) key = derive_seed(key, t);
  const auto labels = predict_random(model_.distribution, key, texts.size());
  std::vector<Prediction> out;
  out.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) out.push_back(one_hot(texts[i], labels[i]));
  return out;
}

}  // namespace ruag
