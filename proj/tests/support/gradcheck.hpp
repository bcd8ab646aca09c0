#pragma once

// Central finite differences of ruag::objective() against ruag::gradient().
// The check perturbs a copy of the model parameter by parameter and compares
// each coordinate independently.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "ruag/linear_model.hpp"

namespace gradcheck {

struct Result {
  double max_rel_error = 0.0;
  double max_abs_error = 0.0;
  double max_abs_gradient = 0.0;
  std::size_t coordinates = 0;
};

// |a - n| / max(|a|, |n|), with differences below abs_floor counted as exact
// so that coordinates whose true gradient is zero do not divide noise by noise.
inline double rel_error(double analytic, double numeric, double abs_floor = 1e-9) {
  const double diff = std::abs(analytic - numeric);
  if (diff <= abs_floor) return 0.0;
  return diff / std::max(std::abs(analytic), std::abs(numeric));
}

inline Result check(const ruag::LinearModel& model, std::span<const ruag::LabeledUtterance> batch,
                    double h = 1e-5) {
  Result res;
  const ruag::LinearGradient g = ruag::gradient(model, batch);
  ruag::LinearModel m = model;
  auto probe = [&](double& param, double analytic) {
    const double saved = param;
    param = saved + h;
    const double up = ruag::objective(m, batch);
    param = saved - h;
    const double down = ruag::objective(m, batch);
    param = saved;
    const double numeric = (up - down) / (2.0 * h);
    res.max_rel_error = std::max(res.max_rel_error, rel_error(analytic, numeric));
    res.max_abs_error = std::max(res.max_abs_error, std::abs(analytic - numeric));
    res.max_abs_gradient = std::max(res.max_abs_gradient, std::abs(analytic));
    ++res.coordinates;
  };
  for (std::size_t i = 0; i < m.weights.size(); ++i) probe(m.weights[i], g.weights[i]);
  for (std::size_t c = 0; c < m.biases.size(); ++c) probe(m.biases[c], g.biases[c]);
  for (auto& [bucket, row] : m.embeddings) {
    const auto it = g.embeddings.find(bucket);
    for (std::size_t d = 0; d < row.size(); ++d) probe(row[d], it == g.embeddings.end() ? 0.0 : it->second[d]);
  }
  return res;
}

// Moves a freshly initialized model away from its all-zero output layer so
// that every gradient path is exercised.
inline void randomize(ruag::LinearModel& m, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (double& w : m.weights) w = u(gen);
  for (double& b : m.biases) b = u(gen);
  for (auto& [bucket, row] : m.embeddings)
    for (double& x : row) x = u(gen);
}

}  // namespace gradcheck
