#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ruag/classifier.hpp"

namespace ruag {

/// Guesses labels i.i.d. from the training label distribution.
struct RandomGuessModel {
  ClassScores distribution{};
  std::uint64_t seed = 0;
};

/// Throws EmptyCorpus.
RandomGuessModel fit_random_guess(std::span<const LabeledUtterance> train, std::uint64_t seed);

/// n i.i.d. draws from a distribution over (POS, AIC, NEG). Throws
/// std::invalid_argument unless the probabilities are non-negative and sum
/// to 1 within 1e-9.
std::vector<Label> predict_random(const ClassScores& distribution, std::uint64_t seed, std::size_t n);

class RandomGuessClassifier : public Classifier {
 public:
  explicit RandomGuessClassifier(RandomGuessModel model) : model_(model) {}

  /// Single predictions draw from a stream keyed by the text.
  Prediction predict(std::string_view text) const override;
  /// Draws one i.i.d. sequence keyed by the model seed and the batch contents.
  std::vector<Prediction> predict_all(std::span<const std::string> texts) const override;
  std::string id() const override { return "random"; }
  const RandomGuessModel& model() const { return model_; }

 private:
  RandomGuessModel model_;
};

}  // namespace ruag
