#include "ruag/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "ruag/text.hpp"

namespace ruag {

double TfIdfVector::norm() const {
  double s = 0.0;
  for (const auto& [i, w] : entries) s += w * w;
  return std::sqrt(s);
}

double dot(const TfIdfVector& a, const TfIdfVector& b) {
  double s = 0.0;
  auto i = a.entries.begin(), j = b.entries.begin();
  while (i != a.entries.end() && j != b.entries.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      s += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return s;
}

double squared_distance(const TfIdfVector& a, const TfIdfVector& b) {
  double s = 0.0;
  auto i = a.entries.begin(), j = b.entries.begin();
  while (i != a.entries.end() || j != b.entries.end()) {
    if (j == b.entries.end() || (i != a.entries.end() && i->first < j->first)) {
      s += i->second * i->second;
      ++i;
    } else if (i == a.entries.end() || j->first < i->first) {
      s += j->second * j->second;
      ++j;
    } else {
      const double d = i->second - j->second;
      s += d * d;
      ++i;
      ++j;
    }
  }
  return s;
}

std::int64_t Vocabulary::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

double Vocabulary::idf(std::uint32_t i) const {
  return std::log((1.0 + static_cast<double>(documents_)) / (1.0 + static_cast<double>(df_[i]))) + 1.0;
}

TfIdfVector Vocabulary::vectorize_tokens(std::span<const std::string> tokens) const {
  std::map<std::uint32_t, double> counts;
  for (const auto& t : tokens) {
    auto it = index_.find(t);
    if (it != index_.end()) counts[it->second] += 1.0;
  }
  TfIdfVector v;
  v.entries.reserve(counts.size());
  double sq = 0.0;
  for (const auto& [i, c] : counts) {
    const double w = c * idf(i);
    v.entries.emplace_back(i, w);
    sq += w * w;
  }
  if (sq > 0.0) {
    const double inv = 1.0 / std::sqrt(sq);
    for (auto& e : v.entries) e.second *= inv;
  }
  return v;
}

TfIdfVector Vocabulary::vectorize(std::string_view text) const {
  const auto tokens = tokenize(text);
  return vectorize_tokens(tokens);
}

Vocabulary Vocabulary::from_counts(std::vector<std::pair<std::string, std::uint32_t>> tokens,
                                   std::size_t document_count) {
  Vocabulary v;
  v.documents_ = document_count;
  for (auto& [tok, df] : tokens) {
    v.index_.emplace(tok, static_cast<std::uint32_t>(v.tokens_.size()));
    v.tokens_.push_back(std::move(tok));
    v.df_.push_back(df);
  }
  return v;
}

Vocabulary fit_tfidf(std::span<const std::string> documents) {
  if (documents.empty()) throw EmptyCorpus();
  Vocabulary v;
  v.documents_ = documents.size();
  std::unordered_set<std::uint32_t> seen;
  for (const auto& doc : documents) {
    seen.clear();
    for (auto& tok : tokenize(doc)) {
      auto [it, inserted] = v.index_.emplace(tok, static_cast<std::uint32_t>(v.tokens_.size()));
      if (inserted) {
        v.tokens_.push_back(std::move(tok));
        v.df_.push_back(0);
      }
      if (seen.insert(it->second).second) ++v.df_[it->second];
    }
  }
  return v;
}

}  // namespace ruag
