#include "ruag/assemble.hpp"

#include <cmath>
#include <unordered_set>

#include "ruag/rng.hpp"

namespace ruag {

DatasetPlan DatasetPlan::scaled_to(std::size_t total_rows) const {
  const double f = static_cast<double>(total_rows) / static_cast<double>(total());
  DatasetPlan out = *this;
  auto scale = [f](std::size_t n) { return static_cast<std::size_t>(std::llround(static_cast<double>(n) * f)); };
  out.pos = scale(pos);
  out.aic = scale(aic);
  out.neg_grammar = scale(neg_grammar);
  out.neg_tfidf = scale(neg_tfidf);
  out.neg_random = scale(neg_random);
  return out;
}

std::array<std::size_t, 3> split_counts(std::size_t n, const std::array<double, 3>& fractions) {
  std::array<std::size_t, 3> out{};
  std::size_t used = 0;
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    out[i] = static_cast<std::size_t>(std::llround(static_cast<double>(n) * fractions[i]));
    used += out[i];
  }
  out.back() = n - used;
  return out;
}

namespace {

void add_grammar_rows(Dataset& ds, const PartitionedGrammar& pg, Label label, std::size_t n, const DatasetPlan& plan,
                      std::uint64_t seed) {
  const auto counts = split_counts(n, plan.partition.split_fractions);
  if (plan.intra_rule_partition) {
    const auto batches = emit_split_datasets(pg, counts, seed);
    for (const Split s : kSplits)
      for (const auto& u : batches[static_cast<std::size_t>(s)].utterances)
        ds.rows.push_back({u, label, to_split_tag(s), "grammar", {}});
    return;
  }
  const SampleBatch batch = sample(pg.source, n, derive_seed(seed, "whole"), true);
  std::size_t i = 0;
  for (const Split s : kSplits)
    for (std::size_t k = 0; k < counts[static_cast<std::size_t>(s)]; ++k, ++i)
      ds.rows.push_back({batch.utterances[i], label, to_split_tag(s), "grammar", {}});
}

std::vector<MinedUtterance> take_reviewed(const MinedNegatives& mined, std::size_t n, const ReviewFn& review,
                                          std::size_t& rejected) {
  std::vector<MinedUtterance> out;
  for (const auto& m : mined.utterances) {
    if (out.size() == n) break;
    if (review && !review(m.text)) {
      ++rejected;
      continue;
    }
    out.push_back(m);
  }
  if (out.size() < n) throw NotEnoughCandidates(out.size(), n);
  return out;
}

}  // namespace

AssembledDataset assemble_dataset(const Grammar& pos, const Grammar& aic, const Grammar& neg,
                                  std::span<const CorpusUtterance> corpus, const DatasetPlan& plan,
                                  std::uint64_t seed, const ReviewFn& review) {
  const auto& fr = plan.partition.split_fractions;
  PartitionConfig pc = plan.partition;
  auto split_grammar = [&](const Grammar& g, const char* name) {
    pc.seed = derive_seed(seed, name);
    return partition(g, pc);
  };
  AssembledDataset out{{}, split_grammar(pos, "pos"), split_grammar(aic, "aic"), split_grammar(neg, "neg"), 0};

  Dataset& ds = out.dataset;
  add_grammar_rows(ds, out.pos, Label::pos, plan.pos, plan, derive_seed(seed, "pos"));
  add_grammar_rows(ds, out.aic, Label::aic, plan.aic, plan, derive_seed(seed, "aic"));
  add_grammar_rows(ds, out.neg, Label::neg, plan.neg_grammar, plan, derive_seed(seed, "neg"));

  // Over-draw so that rejected candidates can be replaced.
  auto with_margin = [](std::size_t n) { return n + n / 4 + 16; };

  std::vector<std::string> positives;
  for (const auto& r : ds.rows)
    if (r.label == Label::pos && r.split == SplitTag::train) positives.push_back(r.text);

  std::vector<MinedUtterance> mined;
  std::unordered_set<std::string> taken;
  if (plan.neg_tfidf > 0) {
    const auto cand = mine_negatives(corpus, positives, std::min(with_margin(plan.neg_tfidf), corpus.size()),
                                     MiningMethod::tfidf_weighted, derive_seed(seed, "tfidf"));
    for (auto& m : take_reviewed(cand, plan.neg_tfidf, review, out.rejected)) {
      taken.insert(m.text);
      mined.push_back(std::move(m));
    }
  }
  if (plan.neg_random > 0) {
    std::vector<CorpusUtterance> rest;
    for (const auto& c : corpus)
      if (!taken.count(c.text)) rest.push_back(c);
    const auto cand = mine_negatives(rest, {}, std::min(with_margin(plan.neg_random), rest.size()),
                                     MiningMethod::random, derive_seed(seed, "random"));
    for (auto& m : take_reviewed(cand, plan.neg_random, review, out.rejected)) mined.push_back(std::move(m));
  }

  // The tfidf and random portions are dealt separately so both keep the
  // split proportions.
  Rng rng(derive_seed(seed, "deal"));
  std::size_t begin = 0;
  for (const std::size_t n : {plan.neg_tfidf, plan.neg_random}) {
    std::span<MinedUtterance> part(mined.data() + begin, n);
    rng.shuffle(part);
    const auto counts = split_counts(n, fr);
    std::size_t i = 0;
    for (const Split s : kSplits)
      for (std::size_t k = 0; k < counts[static_cast<std::size_t>(s)]; ++k, ++i)
        ds.rows.push_back({part[i].text, Label::neg, to_split_tag(s), part[i].source, {}});
    begin += n;
  }
  return out;
}

}  // namespace ruag
