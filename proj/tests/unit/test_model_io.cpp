#include <cstring>
#include <random>

#include "doctest.h"
#include "ruag/model_io.hpp"

using namespace ruag;

namespace {

std::vector<LabeledUtterance> train_set() {
  return {{"are you a robot", Label::pos, SplitTag::train, "", {}},
          {"is this a human", Label::pos, SplitTag::train, "", {}},
          {"you sound robotic", Label::aic, SplitTag::train, "", {}},
          {"are you a nice robot", Label::aic, SplitTag::train, "", {}},
          {"do you like dogs", Label::neg, SplitTag::train, "", {}},
          {"are you a doctor", Label::neg, SplitTag::train, "", {}}};
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_bits(a[i], b[i])) return false;
  return true;
}

const std::vector<std::string> kQueries{"are you a robot", "do you like robots?", "zzz", "you sound nice"};

void check_same_predictions(const AnyModel& a, const AnyModel& b) {
  const auto ca = make_classifier(a), cb = make_classifier(b);
  CHECK(ca->id() == cb->id());
  const auto pa = ca->predict_all(kQueries), pb = cb->predict_all(kQueries);
  for (std::size_t i = 0; i < kQueries.size(); ++i) {
    CHECK(pa[i].label == pb[i].label);
    for (std::size_t c = 0; c < kNumLabels; ++c) CHECK(same_bits(pa[i].scores[c], pb[i].scores[c]));
  }
}

}  // namespace

TEST_CASE("linear models reload bit for bit") {
  Hyperparams ng = Hyperparams::ngram_defaults();
  ng.dim = 16;
  for (const LinearModel& m : {train_bow_lr(train_set(), Hyperparams::bow_lr_defaults(), 2),
                               train_ngram_linear(train_set(), ng, 2)}) {
    const std::string text = save_model(m);
    const AnyModel back = load_model(text);
    const auto& l = std::get<LinearModel>(back);
    CHECK(l.kind == m.kind);
    CHECK(l.hp == m.hp);
    CHECK(l.vocab == m.vocab);
    CHECK(same_bits(l.weights, m.weights));
    for (std::size_t c = 0; c < kNumLabels; ++c) CHECK(same_bits(l.biases[c], m.biases[c]));
    REQUIRE(l.embeddings.size() == m.embeddings.size());
    for (const auto& [bucket, row] : m.embeddings) CHECK(same_bits(l.embeddings.at(bucket), row));
    CHECK(save_model(back) == text);
    check_same_predictions(m, back);
  }
}

TEST_CASE("ir and random models reload") {
  const IrModel ir = train_ir(train_set());
  const AnyModel ir_back = load_model(save_model(ir));
  CHECK(std::get<IrModel>(ir_back).texts == ir.texts);
  CHECK(std::get<IrModel>(ir_back).vectors == ir.vectors);
  check_same_predictions(ir, ir_back);

  const RandomGuessModel rg = fit_random_guess(train_set(), 77);
  const AnyModel rg_back = load_model(save_model(rg));
  CHECK(std::get<RandomGuessModel>(rg_back).seed == 77);
  for (std::size_t c = 0; c < kNumLabels; ++c)
    CHECK(same_bits(std::get<RandomGuessModel>(rg_back).distribution[c], rg.distribution[c]));
  check_same_predictions(rg, rg_back);
}

TEST_CASE("malformed model files") {
  CHECK_THROWS_AS(load_model(""), ModelFormatError);
  CHECK_THROWS_AS(load_model("ruag-model\t2\n"), ModelFormatError);
  CHECK_THROWS_AS(load_model("ruag-model\t1\nkind\tsvm\nend\n"), ModelFormatError);
  std::string truncated = save_model(fit_random_guess(train_set(), 1));
  truncated.resize(truncated.size() / 2);
  CHECK_THROWS_AS(load_model(truncated), ModelFormatError);
}
