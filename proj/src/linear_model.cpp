#include "ruag/linear_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ruag/rng.hpp"
#include "ruag/text.hpp"

namespace ruag {

std::string_view linear_kind_name(LinearKind k) {
  return k == LinearKind::bow_lr ? "bow_lr" : "ngram_linear";
}

Hyperparams Hyperparams::bow_lr_defaults() { return Hyperparams{}; }

Hyperparams Hyperparams::ngram_defaults() {
  Hyperparams hp;
  hp.epochs = 10;
  hp.learning_rate = 3.0;
  hp.l2 = 0.0;
  hp.batch_size = 1;
  return hp;
}

std::vector<std::uint64_t> ngram_buckets(std::span<const std::string> tokens, std::size_t n_max,
                                         std::uint64_t buckets) {
  std::vector<std::uint64_t> token_hash;
  token_hash.reserve(tokens.size());
  for (const auto& t : tokens) token_hash.push_back(fnv1a(t));
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::uint64_t h = 0;
    for (std::size_t n = 1; n <= n_max && i + n <= tokens.size(); ++n) {
      h = h * 116049371ULL + token_hash[i + n - 1];
      // Mix in the order so that a unigram and a bigram never share a key by
      // construction, then fold into the bucket range.
      const std::uint64_t key = (h ^ (n * 0x9e3779b97f4a7c15ULL)) * 0xff51afd7ed558ccdULL;
      out.push_back((key >> 7) % buckets);
    }
  }
  return out;
}

namespace {

struct Features {
  TfIdfVector tfidf;
  std::vector<std::uint64_t> buckets;  // only buckets with an embedding row
};

Features featurize(const LinearModel& m, std::string_view text) {
  Features f;
  const auto tokens = tokenize(text);
  if (m.kind == LinearKind::bow_lr) {
    f.tfidf = m.vocab.vectorize_tokens(tokens);
  } else {
    for (std::uint64_t b : ngram_buckets(tokens, m.hp.ngram_max, m.hp.hash_buckets))
      if (m.embeddings.count(b)) f.buckets.push_back(b);
  }
  return f;
}

std::vector<double> hidden(const LinearModel& m, const Features& f) {
  std::vector<double> h(m.features, 0.0);
  if (f.buckets.empty()) return h;
  for (std::uint64_t b : f.buckets) {
    const auto& row = m.embeddings.at(b);
    for (std::size_t d = 0; d < m.features; ++d) h[d] += row[d];
  }
  const double inv = 1.0 / static_cast<double>(f.buckets.size());
  for (double& x : h) x *= inv;
  return h;
}

ClassScores logits(const LinearModel& m, const Features& f, const std::vector<double>& h) {
  ClassScores s = m.biases;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    const double* w = m.weights.data() + c * m.features;
    if (m.kind == LinearKind::bow_lr) {
      for (const auto& [i, x] : f.tfidf.entries) s[c] += w[i] * x;
    } else {
      for (std::size_t d = 0; d < m.features; ++d) s[c] += w[d] * h[d];
    }
  }
  return s;
}

ClassScores softmax(const ClassScores& z) {
  const double mx = *std::max_element(z.begin(), z.end());
  ClassScores p;
  double sum = 0.0;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    p[c] = std::exp(z[c] - mx);
    sum += p[c];
  }
  for (double& x : p) x /= sum;
  return p;
}

double log_softmax_at(const ClassScores& z, std::size_t k) {
  const double mx = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double v : z) sum += std::exp(v - mx);
  return z[k] - mx - std::log(sum);
}

double weight_penalty(const LinearModel& m) {
  if (m.hp.l2 == 0.0) return 0.0;
  double sq = 0.0;
  for (double w : m.weights) sq += w * w;
  return 0.5 * m.hp.l2 * sq;
}

double batch_objective(const LinearModel& m, std::span<const Features> feats, std::span<const Label> labels) {
  double loss = 0.0;
  for (std::size_t i = 0; i < feats.size(); ++i) {
    const auto h = m.kind == LinearKind::ngram_linear ? hidden(m, feats[i]) : std::vector<double>{};
    loss -= log_softmax_at(logits(m, feats[i], h), index_of(labels[i]));
  }
  return loss / static_cast<double>(feats.size()) + weight_penalty(m);
}

LinearGradient zero_gradient(const LinearModel& m) {
  LinearGradient g;
  g.weights.assign(m.weights.size(), 0.0);
  return g;
}

// Adds the gradient of the batch-mean objective to g. Indices select the batch
// members out of feats/labels.
void accumulate_gradient(const LinearModel& m, std::span<const Features> feats, std::span<const Label> labels,
                         std::span<const std::size_t> batch, LinearGradient& g) {
  const double inv_n = 1.0 / static_cast<double>(batch.size());
  for (std::size_t idx : batch) {
    const Features& f = feats[idx];
    const auto h = m.kind == LinearKind::ngram_linear ? hidden(m, f) : std::vector<double>{};
    ClassScores delta = softmax(logits(m, f, h));
    delta[index_of(labels[idx])] -= 1.0;
    for (double& d : delta) d *= inv_n;

    for (std::size_t c = 0; c < kNumLabels; ++c) {
      g.biases[c] += delta[c];
      double* gw = g.weights.data() + c * m.features;
      if (m.kind == LinearKind::bow_lr) {
        for (const auto& [i, x] : f.tfidf.entries) gw[i] += delta[c] * x;
      } else {
        for (std::size_t d = 0; d < m.features; ++d) gw[d] += delta[c] * h[d];
      }
    }
    if (m.kind == LinearKind::ngram_linear && !f.buckets.empty()) {
      std::vector<double> dh(m.features, 0.0);
      for (std::size_t c = 0; c < kNumLabels; ++c) {
        const double* w = m.weights.data() + c * m.features;
        for (std::size_t d = 0; d < m.features; ++d) dh[d] += w[d] * delta[c];
      }
      const double share = 1.0 / static_cast<double>(f.buckets.size());
      for (std::uint64_t b : f.buckets) {
        auto& row = g.embeddings[b];
        if (row.empty()) row.assign(m.features, 0.0);
        for (std::size_t d = 0; d < m.features; ++d) row[d] += dh[d] * share;
      }
    }
  }
  if (m.hp.l2 != 0.0)
    for (std::size_t i = 0; i < m.weights.size(); ++i) g.weights[i] += m.hp.l2 * m.weights[i];
}

void apply_step(LinearModel& m, const LinearGradient& g, double lr) {
  for (std::size_t i = 0; i < m.weights.size(); ++i) m.weights[i] -= lr * g.weights[i];
  for (std::size_t c = 0; c < kNumLabels; ++c) m.biases[c] -= lr * g.biases[c];
  for (const auto& [b, grow] : g.embeddings) {
    auto& row = m.embeddings.at(b);
    for (std::size_t d = 0; d < m.features; ++d) row[d] -= lr * grow[d];
  }
}

void check_train_set(std::span<const LabeledUtterance> train) {
  if (train.empty()) throw EmptyCorpus();
  require_all_classes(train);
}

std::vector<std::string> texts_of(std::span<const LabeledUtterance> data) {
  std::vector<std::string> out;
  out.reserve(data.size());
  for (const auto& u : data) out.push_back(u.text);
  return out;
}

struct Prepared {
  std::vector<Features> feats;
  std::vector<Label> labels;
};

Prepared prepare(const LinearModel& m, std::span<const LabeledUtterance> data) {
  Prepared p;
  p.feats.reserve(data.size());
  p.labels.reserve(data.size());
  for (const auto& u : data) {
    p.feats.push_back(featurize(m, u.text));
    p.labels.push_back(u.label);
  }
  return p;
}

template <typename Schedule>
void run_training(LinearModel& m, const Prepared& data, std::uint64_t seed, const EpochCallback& on_epoch,
                  Schedule schedule) {
  const std::size_t n = data.feats.size();
  const std::size_t batch_size = std::max<std::size_t>(1, m.hp.batch_size);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(derive_seed(seed, "train-order"));
  const std::size_t steps_per_epoch = (n + batch_size - 1) / batch_size;
  const std::size_t total_steps = steps_per_epoch * m.hp.epochs;
  std::size_t step = 0;
  for (std::size_t epoch = 1; epoch <= m.hp.epochs; ++epoch) {
    if (m.hp.shuffle) rng.shuffle(std::span<std::size_t>(order));
    for (std::size_t begin = 0; begin < n; begin += batch_size) {
      const std::size_t end = std::min(n, begin + batch_size);
      LinearGradient g = zero_gradient(m);
      accumulate_gradient(m, data.feats, data.labels,
                          std::span<const std::size_t>(order.data() + begin, end - begin), g);
      apply_step(m, g, schedule(step, total_steps));
      ++step;
    }
    if (on_epoch) on_epoch(epoch, batch_objective(m, data.feats, data.labels));
  }
}

}  // namespace

LinearModel init_bow_lr(std::span<const LabeledUtterance> train, const Hyperparams& hp) {
  check_train_set(train);
  LinearModel m;
  m.kind = LinearKind::bow_lr;
  m.hp = hp;
  const auto docs = texts_of(train);
  m.vocab = fit_tfidf(docs);
  m.features = m.vocab.size();
  m.weights.assign(kNumLabels * m.features, 0.0);
  return m;
}

LinearModel init_ngram_linear(std::span<const LabeledUtterance> train, const Hyperparams& hp,
                              std::uint64_t seed) {
  check_train_set(train);
  if (hp.dim == 0 || hp.ngram_max == 0 || hp.hash_buckets == 0)
    throw std::invalid_argument("dim, ngram_max and hash_buckets must be positive");
  LinearModel m;
  m.kind = LinearKind::ngram_linear;
  m.hp = hp;
  m.features = hp.dim;
  m.weights.assign(kNumLabels * m.features, 0.0);
  const double bound = 1.0 / static_cast<double>(hp.dim);
  const std::uint64_t base = derive_seed(seed, "embeddings");
  for (const auto& u : train) {
    const auto tokens = tokenize(u.text);
    for (std::uint64_t b : ngram_buckets(tokens, hp.ngram_max, hp.hash_buckets)) {
      auto [it, inserted] = m.embeddings.try_emplace(b);
      if (!inserted) continue;
      Rng rng(derive_seed(base, b));
      it->second.resize(hp.dim);
      for (double& x : it->second) x = (2.0 * rng.uniform() - 1.0) * bound;
    }
  }
  return m;
}

LinearModel train_bow_lr(std::span<const LabeledUtterance> train, const Hyperparams& hp, std::uint64_t seed,
                         const EpochCallback& on_epoch) {
  LinearModel m = init_bow_lr(train, hp);
  const Prepared data = prepare(m, train);
  const std::size_t steps_per_epoch = (train.size() + std::max<std::size_t>(1, hp.batch_size) - 1) /
                                      std::max<std::size_t>(1, hp.batch_size);
  // t counts epochs: the rate is constant within an epoch.
  run_training(m, data, seed, on_epoch, [&](std::size_t step, std::size_t) {
    return hp.learning_rate / std::sqrt(static_cast<double>(step / steps_per_epoch + 1));
  });
  return m;
}

LinearModel train_ngram_linear(std::span<const LabeledUtterance> train, const Hyperparams& hp,
                               std::uint64_t seed, const EpochCallback& on_epoch) {
  LinearModel m = init_ngram_linear(train, hp, seed);
  const Prepared data = prepare(m, train);
  run_training(m, data, seed, on_epoch, [&](std::size_t step, std::size_t total) {
    return hp.learning_rate * (1.0 - static_cast<double>(step) / static_cast<double>(total));
  });
  return m;
}

double objective(const LinearModel& m, std::span<const LabeledUtterance> batch) {
  if (batch.empty()) throw EmptyCorpus();
  const Prepared p = prepare(m, batch);
  return batch_objective(m, p.feats, p.labels);
}

LinearGradient gradient(const LinearModel& m, std::span<const LabeledUtterance> batch) {
  if (batch.empty()) throw EmptyCorpus();
  const Prepared p = prepare(m, batch);
  std::vector<std::size_t> all(batch.size());
  std::iota(all.begin(), all.end(), 0);
  LinearGradient g = zero_gradient(m);
  accumulate_gradient(m, p.feats, p.labels, all, g);
  return g;
}

ClassScores class_probabilities(const LinearModel& m, std::string_view text) {
  const Features f = featurize(m, text);
  const auto h = m.kind == LinearKind::ngram_linear ? hidden(m, f) : std::vector<double>{};
  return softmax(logits(m, f, h));
}

Prediction predict(const LinearModel& m, std::string_view text) {
  Prediction p;
  p.text = std::string(text);
  p.scores = class_probabilities(m, text);
  p.label = argmax_label(p.scores);
  return p;
}

}  // namespace ruag
