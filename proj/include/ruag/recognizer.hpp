#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ruag/grammar.hpp"
#include "ruag/labels.hpp"

namespace ruag {

/// True iff text is in the language of g. Text is expected to be normalized;
/// terminals are compared ASCII case-insensitively. Memoizes, per rule and
/// start offset, the set of offsets where a match can end.
bool member(const Grammar& g, std::string_view text);

/// Grammar-membership classifier over a positive and an AIC grammar.
struct RecognizerModel {
  Grammar pos_grammar;
  Grammar aic_grammar;
  bool heuristics_enabled = true;
};

/// Texts tried against the grammars: the full utterance and, with heuristics,
/// the last sentence and every sentence ending in '?'. Each appears with and
/// without a single trailing `?`, `.` or `!`. No duplicates, first-seen order.
std::vector<std::string> candidate_texts(std::string_view normalized, bool heuristics);

/// POS if any candidate is in the positive grammar, else AIC if any is in the
/// AIC grammar, else NEG. Empty input is NEG.
Label classify(const RecognizerModel& m, std::string_view text);

}  // namespace ruag

#include "ruag/classifier.hpp"

namespace ruag {

/// The grammar classifier behind the common interface; scores are one-hot.
class GrammarClassifier : public Classifier {
 public:
  explicit GrammarClassifier(RecognizerModel model) : model_(std::move(model)) {}

  Prediction predict(std::string_view text) const override;
  std::string id() const override { return "grammar"; }
  const RecognizerModel& model() const { return model_; }

 private:
  RecognizerModel model_;
};

}  // namespace ruag
