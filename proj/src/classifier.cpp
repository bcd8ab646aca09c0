#include "ruag/classifier.hpp"

#include <algorithm>

namespace ruag {

Label argmax_label(const ClassScores& scores) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i)
    if (scores[i] > scores[best]) best = i;
  return kLabels[best];
}

MissingClass::MissingClass(Label label)
    : Error("training data has no examples of class " + std::string(label_name(label))),
      label_(label) {}

void require_all_classes(std::span<const LabeledUtterance> train) {
  for (Label l : kLabels) {
    const bool present =
        std::any_of(train.begin(), train.end(), [&](const LabeledUtterance& u) { return u.label == l; });
    if (!present) throw MissingClass(l);
  }
}

std::vector<Prediction> Classifier::predict_all(std::span<const std::string> texts) const {
  std::vector<Prediction> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(predict(t));
  return out;
}

}  // namespace ruag
