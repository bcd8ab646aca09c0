#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ruag/classifier.hpp"
#include "ruag/labels.hpp"
#include "ruag/tfidf.hpp"

namespace ruag {

enum class LinearKind : std::uint8_t { bow_lr, ngram_linear };

std::string_view linear_kind_name(LinearKind k);

struct Hyperparams {
  std::size_t ngram_max = 3;
  std::uint64_t hash_buckets = 2'000'000;
  std::size_t dim = 300;
  std::size_t epochs = 100;
  double learning_rate = 5.0;
  double l2 = 1e-4;
  std::size_t batch_size = 32;
  bool shuffle = true;

  /// TF-IDF logistic regression: lr 5 decaying 1/sqrt(epoch), l2 1e-4,
  /// 100 epochs, batch 32.
  static Hyperparams bow_lr_defaults();
  /// Hashed word n-grams up to 3, 300-dim embeddings, 10 epochs of SGD with a
  /// linearly decaying learning rate.
  static Hyperparams ngram_defaults();

  bool operator==(const Hyperparams&) const = default;
};

using EmbeddingTable = std::unordered_map<std::uint64_t, std::vector<double>>;

/// Softmax classifier shared by both linear kinds. For bow_lr the features
/// are TF-IDF components over `vocab`; for ngram_linear they are the mean of
/// the embedding rows of the utterance's hashed n-grams.
struct LinearModel {
  LinearKind kind = LinearKind::bow_lr;
  Hyperparams hp;
  Vocabulary vocab;
  std::size_t features = 0;
  /// Class-major: weight(c, f) = weights[c * features + f].
  std::vector<double> weights;
  ClassScores biases{};
  EmbeddingTable embeddings;

  double weight(std::size_t c, std::size_t f) const { return weights[c * features + f]; }
};

/// Gradient of objective() with the same layout as the model parameters.
struct LinearGradient {
  std::vector<double> weights;
  ClassScores biases{};
  EmbeddingTable embeddings;
};

/// Hashed word n-gram buckets (1..n_max) of a token sequence, in order of
/// occurrence, duplicates kept.
std::vector<std::uint64_t> ngram_buckets(std::span<const std::string> tokens, std::size_t n_max,
                                         std::uint64_t buckets);

/// Fits the vocabulary and zero-initializes weights.
LinearModel init_bow_lr(std::span<const LabeledUtterance> train, const Hyperparams& hp);
/// Creates embedding rows for every training bucket, uniform in
/// [-1/dim, 1/dim] and seeded per bucket; output weights start at zero.
LinearModel init_ngram_linear(std::span<const LabeledUtterance> train, const Hyperparams& hp,
                              std::uint64_t seed);

/// Called after each epoch with the 1-based epoch and the training objective.
using EpochCallback = std::function<void(std::size_t epoch, double objective)>;

/// Multinomial logistic regression trained by mini-batch gradient descent.
/// Throws MissingClass / EmptyCorpus.
LinearModel train_bow_lr(std::span<const LabeledUtterance> train, const Hyperparams& hp,
                         std::uint64_t seed, const EpochCallback& on_epoch = {});

LinearModel train_ngram_linear(std::span<const LabeledUtterance> train, const Hyperparams& hp,
                               std::uint64_t seed, const EpochCallback& on_epoch = {});

/// Mean cross-entropy over the batch plus (l2 / 2) * ||weights||^2.
double objective(const LinearModel& m, std::span<const LabeledUtterance> batch);
LinearGradient gradient(const LinearModel& m, std::span<const LabeledUtterance> batch);

/// Class probabilities.
ClassScores class_probabilities(const LinearModel& m, std::string_view text);
Prediction predict(const LinearModel& m, std::string_view text);

class LinearClassifier : public Classifier {
 public:
  explicit LinearClassifier(LinearModel model) : model_(std::move(model)) {}

  Prediction predict(std::string_view text) const override { return ruag::predict(model_, text); }
  std::string id() const override { return std::string(linear_kind_name(model_.kind)); }
  const LinearModel& model() const { return model_; }

 private:
  LinearModel model_;
};

}  // namespace ruag
