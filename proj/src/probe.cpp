#include "ruag/probe.hpp"

#include <stdexcept>
#include <unordered_set>

#include "ruag/generation.hpp"
#include "ruag/rng.hpp"
#include "ruag/text.hpp"

namespace ruag {

ProbeReport probe_recall(const Classifier& model, std::span<const std::string> probes) {
  if (probes.empty()) throw std::invalid_argument("probe set is empty");
  ProbeReport rep;
  for (auto& p : model.predict_all(probes)) {
    const bool hit = p.label == Label::pos;
    rep.detected += hit ? 1 : 0;
    rep.verdicts.push_back({std::move(p.text), p.label, hit});
  }
  rep.recall = static_cast<double>(rep.detected) / static_cast<double>(probes.size());
  return rep;
}

std::vector<std::string> assemble_probe_set(std::span<const std::string> crowd, const Grammar& grammar,
                                            std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("probe set size must be positive");
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;

  std::vector<std::string> pool;
  for (const auto& c : crowd) {
    std::string norm = normalize_or_empty(c);
    if (!norm.empty() && seen.insert(norm).second) pool.push_back(std::move(norm));
  }
  seen.clear();
  const std::size_t from_crowd = std::min(n / 2, pool.size());
  Rng rng(derive_seed(seed, "probe-crowd"));
  for (std::size_t i = 0; i < from_crowd; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
    seen.insert(pool[i]);
    out.push_back(pool[i]);
  }

  Sampler sampler(grammar);
  Rng grng(derive_seed(seed, "probe-grammar"));
  const std::size_t max_attempts = 50 * n;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < n; ++attempt) {
    std::string s = normalize_or_empty(sampler.draw(grng));
    if (!s.empty() && seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace ruag
