#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ruag/classifier.hpp"
#include "ruag/grammar.hpp"

namespace ruag {

struct ProbeVerdict {
  std::string text;
  Label predicted = Label::neg;
  bool detected = false;
};

struct ProbeReport {
  double recall = 0.0;
  std::size_t detected = 0;
  std::vector<ProbeVerdict> verdicts;
};

/// Fraction of positive probes the classifier labels POS, with a per-probe
/// audit table. Throws std::invalid_argument on an empty probe set.
ProbeReport probe_recall(const Classifier& model, std::span<const std::string> probes);

/// Probe set of n unique phrasings: half drawn without replacement from crowd
/// utterances, the rest sampled from the grammar, skipping duplicates.
std::vector<std::string> assemble_probe_set(std::span<const std::string> crowd, const Grammar& grammar,
                                            std::size_t n, std::uint64_t seed);

}  // namespace ruag
