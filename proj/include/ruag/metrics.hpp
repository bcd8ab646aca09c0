#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "ruag/classifier.hpp"
#include "ruag/labels.hpp"

namespace ruag {

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t predicted, std::size_t gold);
};

class NoPositivesInGold : public Error {
 public:
  NoPositivesInGold() : Error("recall is undefined: no gold POS examples") {}
};

/// counts[gold][predicted], class order POS, AIC, NEG.
struct ConfusionMatrix {
  std::array<std::array<std::size_t, kNumLabels>, kNumLabels> counts{};

  void add(Label gold, Label predicted) { ++counts[index_of(gold)][index_of(predicted)]; }
  std::size_t total() const;
  std::size_t gold_count(Label l) const;
  std::size_t predicted_count(Label l) const;
  std::size_t at(Label gold, Label predicted) const { return counts[index_of(gold)][index_of(predicted)]; }

  ConfusionMatrix& operator+=(const ConfusionMatrix& o);
  bool operator==(const ConfusionMatrix&) const = default;
};

ConfusionMatrix confusion(std::span<const Label> predicted, std::span<const Label> gold);

/// Positive precision with 0.25 credit for gold-AIC predicted POS:
///   (|pred=gold=POS| + 0.25 |pred=POS, gold=AIC|) / |pred=POS|.
/// Returns 1.0 when nothing is predicted POS.
double weighted_precision(const ConfusionMatrix& cm);
double weighted_precision(std::span<const Label> predicted, std::span<const Label> gold);
double weighted_precision(std::span<const Prediction> predictions, std::span<const Label> gold);

/// |pred=gold=POS| / |gold=POS|; gold-AIC rows do not enter. Throws
/// NoPositivesInGold.
double recall_pos(const ConfusionMatrix& cm);
double recall_pos(std::span<const Label> predicted, std::span<const Label> gold);
double recall_pos(std::span<const Prediction> predictions, std::span<const Label> gold);

double accuracy(const ConfusionMatrix& cm);

/// Cube root of the product; 0 if any factor is 0.
double geometric_mean(double p_w, double r, double acc);

struct MetricsReport {
  double p_w = 0.0;
  double r = 0.0;
  double acc = 0.0;
  double m = 0.0;
  ConfusionMatrix counts;
  std::size_t n = 0;
  /// Set when no example was predicted POS and p_w fell back to 1.0.
  bool vacuous_precision = false;
};

MetricsReport metrics_from_confusion(const ConfusionMatrix& cm);

struct Evaluation {
  MetricsReport report;
  std::vector<Prediction> predictions;
};

/// Runs the classifier over data and scores it. Throws std::invalid_argument
/// on empty data and NoPositivesInGold when recall is undefined.
Evaluation evaluate(const Classifier& model, std::span<const LabeledUtterance> data);

/// Value x100 with one decimal, except that exactly 100 prints as "100".
std::string format_percent(double value);

/// `P_w<TAB>R<TAB>Acc<TAB>M` header and one row.
std::string report_header();
std::string report_row(const MetricsReport& r);

}  // namespace ruag
