#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "ruag/assemble.hpp"
#include "ruag/recognizer.hpp"

using namespace ruag;

namespace {

Grammar load(const char* rel) { return parse_grammar(fixtures::read(fixtures::data_path(rel))); }

std::vector<CorpusUtterance> load_corpus() {
  std::vector<CorpusUtterance> out;
  std::istringstream in(fixtures::read(fixtures::data_path("corpus/chitchat.txt")));
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back({line, "chitchat"});
  return out;
}

std::size_t count(const Dataset& ds, Label l, SplitTag s) {
  std::size_t n = 0;
  for (const auto& r : ds.rows) n += r.label == l && r.split == s;
  return n;
}

}  // namespace

TEST_CASE("split counts") {
  CHECK(split_counts(2720, {0.7, 0.15, 0.15}) == std::array<std::size_t, 3>{1904, 408, 408});
  CHECK(split_counts(10, {0.7, 0.15, 0.15}) == std::array<std::size_t, 3>{7, 2, 1});
  CHECK(split_counts(0, {0.7, 0.15, 0.15}) == std::array<std::size_t, 3>{0, 0, 0});
}

TEST_CASE("default plan totals") {
  const DatasetPlan plan;
  CHECK(plan.total() == 6800);
  const auto pos = split_counts(plan.pos, plan.partition.split_fractions);
  const auto aic = split_counts(plan.aic, plan.partition.split_fractions);
  const std::size_t neg_train = split_counts(plan.neg_grammar, plan.partition.split_fractions)[0] +
                                split_counts(plan.neg_tfidf, plan.partition.split_fractions)[0] +
                                split_counts(plan.neg_random, plan.partition.split_fractions)[0];
  CHECK(pos[0] == 1904);
  CHECK(aic[0] == 476);
  CHECK(neg_train == 2380);
  CHECK(pos[0] + aic[0] + neg_train == 4760);
  const DatasetPlan small = plan.scaled_to(680);
  CHECK(small.total() == 680);
  CHECK(small.pos == 272);
}

TEST_CASE("assembled dataset has the planned shape") {
  const Grammar pos = load("grammars/pos.cfg"), aic = load("grammars/aic.cfg"), neg = load("grammars/neg.cfg");
  const auto corpus = load_corpus();
  const DatasetPlan plan = DatasetPlan{}.scaled_to(1000);
  const GrammarClassifier rec(RecognizerModel{pos, aic, true});
  const ReviewFn review = [&](const std::string& t) { return rec.predict(t).label == Label::neg; };
  const AssembledDataset a = assemble_dataset(pos, aic, neg, corpus, plan, 4, review);

  CHECK(a.dataset.rows.size() == plan.total());
  const auto f = plan.partition.split_fractions;
  const auto pc = split_counts(plan.pos, f);
  CHECK(count(a.dataset, Label::pos, SplitTag::train) == pc[0]);
  CHECK(count(a.dataset, Label::pos, SplitTag::val) == pc[1]);
  CHECK(count(a.dataset, Label::pos, SplitTag::test) == pc[2]);
  CHECK(count(a.dataset, Label::aic, SplitTag::test) == split_counts(plan.aic, f)[2]);

  // Shared alternatives may repeat a phrasing across splits, never within one.
  std::set<std::pair<SplitTag, std::string>> texts;
  for (const auto& r : a.dataset.rows) texts.insert({r.split, r.text});
  CHECK(texts.size() == a.dataset.rows.size());

  // The recognizer agrees with every label, including the reviewed mined rows.
  for (const auto& r : a.dataset.rows) CHECK(rec.predict(r.text).label == r.label);

  // Grammar rows come from their own split's sub-grammar.
  for (const auto& r : a.dataset.rows) {
    if (r.label != Label::pos) continue;
    const Split s = r.split == SplitTag::train ? Split::train : r.split == SplitTag::val ? Split::val : Split::test;
    CHECK(member(a.pos.sub_grammar(s), r.text));
  }

  const AssembledDataset again = assemble_dataset(pos, aic, neg, corpus, plan, 4, review);
  CHECK(again.dataset == a.dataset);
}
