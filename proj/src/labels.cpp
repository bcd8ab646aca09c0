#include "ruag/labels.hpp"

#include <algorithm>
#include <cctype>

namespace ruag {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

char label_code(Label l) {
  switch (l) {
    case Label::pos: return 'p';
    case Label::aic: return 'a';
    case Label::neg: return 'n';
  }
  return 'n';
}

std::string_view label_name(Label l) {
  switch (l) {
    case Label::pos: return "POS";
    case Label::aic: return "AIC";
    case Label::neg: return "NEG";
  }
  return "NEG";
}

std::optional<Label> parse_label(std::string_view s) {
  const std::string v = lower(s);
  if (v == "p" || v == "pos" || v == "positive") return Label::pos;
  if (v == "a" || v == "aic") return Label::aic;
  if (v == "n" || v == "neg" || v == "negative") return Label::neg;
  return std::nullopt;
}

std::string_view split_name(SplitTag s) {
  switch (s) {
    case SplitTag::train: return "train";
    case SplitTag::val: return "val";
    case SplitTag::test: return "test";
    case SplitTag::addtest: return "addtest";
    case SplitTag::none: return "none";
  }
  return "none";
}

std::optional<SplitTag> parse_split(std::string_view s) {
  if (s == "train") return SplitTag::train;
  if (s == "val") return SplitTag::val;
  if (s == "test") return SplitTag::test;
  if (s == "addtest") return SplitTag::addtest;
  if (s == "none") return SplitTag::none;
  return std::nullopt;
}

}  // namespace ruag
