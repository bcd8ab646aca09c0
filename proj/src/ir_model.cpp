#include "ruag/ir_model.hpp"

#include <stdexcept>

namespace ruag {

IrModel train_ir(std::span<const LabeledUtterance> train) {
  if (train.empty()) throw EmptyCorpus();
  IrModel m;
  for (const auto& u : train) {
    m.texts.push_back(u.text);
    m.labels.push_back(u.label);
  }
  m.vocab = fit_tfidf(m.texts);
  m.vectors.reserve(m.texts.size());
  for (const auto& t : m.texts) m.vectors.push_back(m.vocab.vectorize(t));
  return m;
}

namespace {

// Distances between unit vectors carry rounding noise of a few ulps; closer
// than this counts as a tie.
constexpr double kTieTolerance = 1e-12;

}  // namespace

std::size_t nearest_index(std::span<const TfIdfVector> vectors, const TfIdfVector& query) {
  if (vectors.empty()) throw std::invalid_argument("nearest_index needs at least one training vector");
  std::size_t best = 0;
  double best_d = squared_distance(vectors[0], query);
  for (std::size_t i = 1; i < vectors.size() && best_d > 0.0; ++i) {
    const double d = squared_distance(vectors[i], query);
    if (d < best_d - kTieTolerance) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

Label predict_ir(std::span<const TfIdfVector> vectors, std::span<const Label> labels, const TfIdfVector& query) {
  return labels[nearest_index(vectors, query)];
}

Prediction IrClassifier::predict(std::string_view text) const {
  Prediction p;
  p.text = std::string(text);
  p.label = predict_ir(model_.vectors, model_.labels, model_.vocab.vectorize(text));
  p.scores[index_of(p.label)] = 1.0;
  return p;
}

}  // namespace ruag
