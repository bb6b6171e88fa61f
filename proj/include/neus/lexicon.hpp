#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace neus {

/// One VAD lexicon row: a case-folded unigram with valence, arousal, and
/// dominance scores in [0,1].
struct VadEntry {
    std::string term;
    double valence = 0.0;
    double arousal = 0.0;
    double dominance = 0.0;
};

/// Immutable after load; safe to share across evaluation workers.
class VadLexicon {
public:
    VadLexicon() = default;
    VadLexicon(std::unordered_map<std::string, VadEntry> entries, std::string source_name,
               std::size_t duplicate_count = 0, std::size_t multiword_dropped = 0)
        : entries_(std::move(entries)),
          source_name_(std::move(source_name)),
          duplicate_count_(duplicate_count),
          multiword_dropped_(multiword_dropped) {}

    /// Case-folds the token and returns the matching entry, if any.
    std::optional<VadEntry> lookup(std::string_view token) const;

    /// Fraction of token occurrences present in the lexicon (0 for an empty
    /// sequence). Tokens are expected to be already case-folded.
    double coverage(const std::vector<std::string>& tokens) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::string& source_name() const { return source_name_; }
    std::size_t duplicate_count() const { return duplicate_count_; }
    std::size_t multiword_dropped() const { return multiword_dropped_; }
    const std::unordered_map<std::string, VadEntry>& entries() const { return entries_; }

private:
    std::unordered_map<std::string, VadEntry> entries_;
    std::string source_name_;
    std::size_t duplicate_count_ = 0;
    std::size_t multiword_dropped_ = 0;
};

/// Loads a tab-separated lexicon file: term, valence, arousal, dominance.
/// A first row whose valence column is non-numeric is treated as a header.
/// Multi-word terms are dropped (and counted); duplicate terms keep the last
/// row. Throws IoError for unreadable files and ParseError (with line number)
/// for malformed rows or scores outside [0,1].
VadLexicon load_lexicon(const std::string& path);

/// Writes the lexicon back as TSV, terms sorted, full float round-trip
/// precision. load(save(lex)) reproduces the entry map exactly.
void save_lexicon(const VadLexicon& lexicon, const std::string& path);

}  // namespace neus
