#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace neus {

// Bumped whenever tokenize/split_sentences rules change; feeds the report
// config fingerprint.
inline constexpr const char* kTokenizerVersion = "1";

/// Ordered, case-folded tokens of one text.
struct TokenSequence {
    std::vector<std::string> tokens;
    std::size_t source_len_chars = 0;  // code points in the source text
};

struct SentenceList {
    std::vector<std::string> sentences;
};

/// Splits on Unicode whitespace, strips punctuation/symbols at token
/// boundaries, case-folds, and drops pieces that become empty. Internal
/// apostrophes and hyphens survive ("don't", "right-wing").
TokenSequence tokenize(std::string_view text);

/// Rule-based splitter: breaks after `.`, `!`, `?` followed by whitespace or
/// end-of-text, except after a fixed list of abbreviations (U.S., Mr., Dr.,
/// Jr., Sen., Rep., ...) or single-capital initials.
SentenceList split_sentences(std::string_view text);

using NgramCounts = std::unordered_map<std::string, int>;

/// Contiguous n-grams as a multiset. Keys are tokens joined by '\x1f'.
/// n must be >= 1; sequences shorter than n yield an empty multiset.
NgramCounts ngram_counts(const std::vector<std::string>& tokens, int n);

}  // namespace neus
