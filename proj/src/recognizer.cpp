#include "ruag/recognizer.hpp"

#include <algorithm>
#include <cstdint>

#include "ruag/text.hpp"

namespace ruag {

namespace {

char fold(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

bool matches_at(std::string_view text, std::size_t pos, std::string_view terminal) {
  if (terminal.size() > text.size() - pos) return false;
  for (std::size_t i = 0; i < terminal.size(); ++i)
    if (text[pos + i] != fold(terminal[i])) return false;
  return true;
}

class Matcher {
 public:
  Matcher(const Grammar& g, std::string_view text)
      : g_(g), text_(text), width_(text.size() + 1), memo_(g.rules().size() * width_), done_(memo_.size(), 0) {}

  bool accepts() {
    const auto& ends = match_rule(g_.start(), 0);
    return std::binary_search(ends.begin(), ends.end(), static_cast<std::uint32_t>(text_.size()));
  }

 private:
  // Sorted, duplicate-free end offsets of rule r matched from pos.
  const std::vector<std::uint32_t>& match_rule(std::size_t r, std::size_t pos) {
    const std::size_t key = r * width_ + pos;
    if (done_[key]) return memo_[key];
    std::vector<std::uint32_t> ends;
    std::vector<std::uint32_t> frontier, next;
    for (const Alternative& alt : g_.rule(r).alternatives) {
      frontier.assign(1, static_cast<std::uint32_t>(pos));
      for (const Symbol& s : alt.production.symbols) {
        next.clear();
        for (std::uint32_t p : frontier) {
          if (s.is_terminal()) {
            if (matches_at(text_, p, s.value)) next.push_back(static_cast<std::uint32_t>(p + s.value.size()));
          } else {
            const auto& sub = match_rule(s.rule, p);
            next.insert(next.end(), sub.begin(), sub.end());
          }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier.swap(next);
        if (frontier.empty()) break;
      }
      ends.insert(ends.end(), frontier.begin(), frontier.end());
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    memo_[key] = std::move(ends);
    done_[key] = 1;
    return memo_[key];
  }

  const Grammar& g_;
  std::string_view text_;
  std::size_t width_;
  std::vector<std::vector<std::uint32_t>> memo_;
  std::vector<std::uint8_t> done_;
};

bool strip_one_terminal_punct(std::string& s) {
  if (!s.empty() && (s.back() == '?' || s.back() == '.' || s.back() == '!')) {
    s.pop_back();
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return true;
  }
  return false;
}

}  // namespace

bool member(const Grammar& g, std::string_view text) { return Matcher(g, text).accepts(); }

std::vector<std::string> candidate_texts(std::string_view normalized, bool heuristics) {
  std::vector<std::string> base{std::string(normalized)};
  if (heuristics) {
    const auto sentences = split_sentences(normalized);
    if (!sentences.empty()) base.push_back(sentences.back());
    for (const auto& s : sentences)
      if (s.back() == '?') base.push_back(s);
  }
  std::vector<std::string> out;
  auto add = [&](std::string s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  };
  for (auto& c : base) {
    add(c);
    std::string stripped = c;
    if (strip_one_terminal_punct(stripped)) add(std::move(stripped));
  }
  return out;
}

Label classify(const RecognizerModel& m, std::string_view text) {
  const std::string norm = normalize_or_empty(text);
  if (norm.empty()) return Label::neg;
  const auto candidates = candidate_texts(norm, m.heuristics_enabled);
  for (const auto& c : candidates)
    if (member(m.pos_grammar, c)) return Label::pos;
  for (const auto& c : candidates)
    if (member(m.aic_grammar, c)) return Label::aic;
  return Label::neg;
}

}  // namespace ruag

namespace ruag {

Prediction GrammarClassifier::predict(std::string_view text) const {
  Prediction p{std::string(text), classify(model_, text), {}};
  p.scores[index_of(p.label)] = 1.0;
  return p;
}

}  // namespace ruag
