#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ruag/classifier.hpp"
#include "ruag/tfidf.hpp"

namespace ruag {

/// Nearest-neighbour classifier over L2-normed TF-IDF vectors of the
/// training utterances.
struct IrModel {
  Vocabulary vocab;
  std::vector<std::string> texts;
  std::vector<Label> labels;
  std::vector<TfIdfVector> vectors;
};

/// Throws EmptyCorpus.
IrModel train_ir(std::span<const LabeledUtterance> train);

/// Index of the training vector with the smallest euclidean distance to the
/// query; ties go to the lowest index. vectors must be non-empty.
std::size_t nearest_index(std::span<const TfIdfVector> vectors, const TfIdfVector& query);

Label predict_ir(std::span<const TfIdfVector> vectors, std::span<const Label> labels, const TfIdfVector& query);

class IrClassifier : public Classifier {
 public:
  explicit IrClassifier(IrModel model) : model_(std::move(model)) {}

  /// One-hot scores on the label of the nearest training example.
  Prediction predict(std::string_view text) const override;
  std::string id() const override { return "ir"; }
  const IrModel& model() const { return model_; }

 private:
  IrModel model_;
};

}  // namespace ruag
