#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ruag {

/// Intent label. The declaration order is also the fixed class order used for
/// score vectors, tie-breaking and model serialization.
enum class Label : std::uint8_t { pos = 0, aic = 1, neg = 2 };

inline constexpr std::size_t kNumLabels = 3;
inline constexpr std::array<Label, kNumLabels> kLabels = {Label::pos, Label::aic, Label::neg};

constexpr std::size_t index_of(Label l) { return static_cast<std::size_t>(l); }

/// Single-letter code used in dataset files: p / a / n.
char label_code(Label l);
/// Upper-case display name: POS / AIC / NEG.
std::string_view label_name(Label l);
/// Accepts p/a/n, pos/aic/neg, positive/negative (case-insensitive).
std::optional<Label> parse_label(std::string_view s);

enum class SplitTag : std::uint8_t { train, val, test, addtest, none };

std::string_view split_name(SplitTag s);
std::optional<SplitTag> parse_split(std::string_view s);

struct LabeledUtterance {
  std::string text;
  Label label = Label::neg;
  SplitTag split = SplitTag::none;
  std::string source;
  // Columns beyond the four standard ones, kept verbatim.
  std::vector<std::string> extra;

  bool operator==(const LabeledUtterance&) const = default;
};

}  // namespace ruag
