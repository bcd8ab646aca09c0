#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ruag/error.hpp"

namespace ruag {

class EmptyAfterNormalize : public Error {
 public:
  EmptyAfterNormalize() : Error("utterance is empty after normalization") {}
};

/// ASCII-lowercase, collapse whitespace runs to one space, trim. Punctuation
/// is preserved. Throws EmptyAfterNormalize when nothing is left.
std::string normalize(std::string_view text);

/// Like normalize() but returns an empty string instead of throwing.
std::string normalize_or_empty(std::string_view text);

/// normalize(), then split on whitespace with `? . ! ,` detached as
/// standalone tokens. Empty input yields no tokens.
std::vector<std::string> tokenize(std::string_view text);

/// Splits normalized text into sentences. A sentence ends at `.`, `?` or `!`
/// followed by a space or the end of the text; the delimiter stays attached.
std::vector<std::string> split_sentences(std::string_view normalized);

}  // namespace ruag
