#include "ruag/text.hpp"

namespace ruag {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_detached_punct(char c) { return c == '?' || c == '.' || c == '!' || c == ','; }

bool is_sentence_end(char c) { return c == '.' || c == '?' || c == '!'; }

}  // namespace

std::string normalize_or_empty(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  return out;
}

std::string normalize(std::string_view text) {
  std::string out = normalize_or_empty(text);
  if (out.empty()) throw EmptyAfterNormalize();
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  const std::string norm = normalize_or_empty(text);
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char c : norm) {
    if (c == ' ') {
      flush();
    } else if (is_detached_punct(c)) {
      flush();
      tokens.emplace_back(1, c);
    } else {
      current.push_back(c);
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> split_sentences(std::string_view normalized) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    if (!is_sentence_end(normalized[i])) continue;
    const bool at_boundary = i + 1 == normalized.size() || normalized[i + 1] == ' ';
    if (!at_boundary) continue;
    std::string_view s = normalized.substr(start, i + 1 - start);
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    if (!s.empty()) sentences.emplace_back(s);
    start = i + 1;
  }
  std::string_view rest = normalized.substr(std::min(start, normalized.size()));
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  while (!rest.empty() && rest.back() == ' ') rest.remove_suffix(1);
  if (!rest.empty()) sentences.emplace_back(rest);
  return sentences;
}

}  // namespace ruag
