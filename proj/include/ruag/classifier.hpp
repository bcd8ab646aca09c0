#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ruag/error.hpp"
#include "ruag/labels.hpp"

namespace ruag {

using ClassScores = std::array<double, kNumLabels>;

struct Prediction {
  std::string text;
  Label label = Label::neg;
  /// Per-class scores in class order POS, AIC, NEG.
  ClassScores scores{};
};

/// Index of the largest score; ties go to the earlier class (POS, AIC, NEG).
Label argmax_label(const ClassScores& scores);

class MissingClass : public Error {
 public:
  explicit MissingClass(Label label);
  Label label() const { return label_; }

 private:
  Label label_;
};

/// Throws MissingClass for the first class absent from the training data.
void require_all_classes(std::span<const LabeledUtterance> train);

class Classifier {
 public:
  virtual ~Classifier() = default;

  virtual Prediction predict(std::string_view text) const = 0;

  /// Batch prediction, order-preserving. Stateful baselines override this to
  /// draw one sequence for the whole batch.
  virtual std::vector<Prediction> predict_all(std::span<const std::string> texts) const;

  virtual std::string id() const = 0;
};

}  // namespace ruag
