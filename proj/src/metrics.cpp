#include "ruag/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ruag {

LengthMismatch::LengthMismatch(std::size_t predicted, std::size_t gold)
    : Error("prediction count " + std::to_string(predicted) + " does not match gold count " +
            std::to_string(gold)) {}

std::size_t ConfusionMatrix::total() const {
  std::size_t t = 0;
  for (const auto& row : counts)
    for (std::size_t v : row) t += v;
  return t;
}

std::size_t ConfusionMatrix::gold_count(Label l) const {
  std::size_t t = 0;
  for (std::size_t v : counts[index_of(l)]) t += v;
  return t;
}

std::size_t ConfusionMatrix::predicted_count(Label l) const {
  std::size_t t = 0;
  for (const auto& row : counts) t += row[index_of(l)];
  return t;
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& o) {
  for (std::size_t g = 0; g < kNumLabels; ++g)
    for (std::size_t p = 0; p < kNumLabels; ++p) counts[g][p] += o.counts[g][p];
  return *this;
}

ConfusionMatrix confusion(std::span<const Label> predicted, std::span<const Label> gold) {
  if (predicted.size() != gold.size()) throw LengthMismatch(predicted.size(), gold.size());
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < gold.size(); ++i) cm.add(gold[i], predicted[i]);
  return cm;
}

namespace {

std::vector<Label> labels_of(std::span<const Prediction> preds) {
  std::vector<Label> out;
  out.reserve(preds.size());
  for (const auto& p : preds) out.push_back(p.label);
  return out;
}

void require_nonempty(std::size_t n) {
  if (n == 0) throw std::invalid_argument("metrics need at least one example");
}

}  // namespace

double weighted_precision(const ConfusionMatrix& cm) {
  const std::size_t predicted_pos = cm.predicted_count(Label::pos);
  if (predicted_pos == 0) return 1.0;
  const double credit = static_cast<double>(cm.at(Label::pos, Label::pos)) +
                        0.25 * static_cast<double>(cm.at(Label::aic, Label::pos));
  return credit / static_cast<double>(predicted_pos);
}

double weighted_precision(std::span<const Label> predicted, std::span<const Label> gold) {
  const ConfusionMatrix cm = confusion(predicted, gold);
  require_nonempty(cm.total());
  return weighted_precision(cm);
}

double weighted_precision(std::span<const Prediction> predictions, std::span<const Label> gold) {
  const auto labels = labels_of(predictions);
  return weighted_precision(labels, gold);
}

double recall_pos(const ConfusionMatrix& cm) {
  const std::size_t gold_pos = cm.gold_count(Label::pos);
  if (gold_pos == 0) throw NoPositivesInGold();
  return static_cast<double>(cm.at(Label::pos, Label::pos)) / static_cast<double>(gold_pos);
}

double recall_pos(std::span<const Label> predicted, std::span<const Label> gold) {
  return recall_pos(confusion(predicted, gold));
}

double recall_pos(std::span<const Prediction> predictions, std::span<const Label> gold) {
  const auto labels = labels_of(predictions);
  return recall_pos(labels, gold);
}

double accuracy(const ConfusionMatrix& cm) {
  const std::size_t n = cm.total();
  require_nonempty(n);
  std::size_t correct = 0;
  for (std::size_t c = 0; c < kNumLabels; ++c) correct += cm.counts[c][c];
  return static_cast<double>(correct) / static_cast<double>(n);
}

double geometric_mean(double p_w, double r, double acc) {
  if (p_w <= 0.0 || r <= 0.0 || acc <= 0.0) return 0.0;
  return std::cbrt(p_w * r * acc);
}

MetricsReport metrics_from_confusion(const ConfusionMatrix& cm) {
  MetricsReport rep;
  rep.counts = cm;
  rep.n = cm.total();
  require_nonempty(rep.n);
  rep.vacuous_precision = cm.predicted_count(Label::pos) == 0;
  rep.p_w = weighted_precision(cm);
  rep.r = recall_pos(cm);
  rep.acc = accuracy(cm);
  rep.m = geometric_mean(rep.p_w, rep.r, rep.acc);
  return rep;
}

Evaluation evaluate(const Classifier& model, std::span<const LabeledUtterance> data) {
  require_nonempty(data.size());
  std::vector<std::string> texts;
  std::vector<Label> gold;
  texts.reserve(data.size());
  gold.reserve(data.size());
  for (const auto& u : data) {
    texts.push_back(u.text);
    gold.push_back(u.label);
  }
  Evaluation ev;
  ev.predictions = model.predict_all(texts);
  ev.report = metrics_from_confusion(confusion(labels_of(ev.predictions), gold));
  return ev;
}

std::string format_percent(double value) {
  // Only an exact 1.0 prints as "100"; 99.96 rounds to "100.0".
  if (value == 1.0) return "100";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", value * 100.0);
  return buf;
}

std::string report_header() { return "P_w\tR\tAcc\tM"; }

std::string report_row(const MetricsReport& r) {
  return format_percent(r.p_w) + '\t' + format_percent(r.r) + '\t' + format_percent(r.acc) + '\t' +
         format_percent(r.m);
}

}  // namespace ruag
