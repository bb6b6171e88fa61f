#pragma once

#include <map>
#include <string>
#include <vector>

#include "neus/lexicon.hpp"
#include "neus/textproc.hpp"

namespace neus {

enum class Polarity { Positive, Negative, Neutral };

enum class CountMode { Occurrence, Type };

struct BiasConfig {
    double pos_threshold = 0.65;  // valence strictly above -> positive
    double neg_threshold = 0.35;  // valence strictly below -> negative
    CountMode count_mode = CountMode::Occurrence;
};

/// A hypothesis token that survived calibration and carries polar valence.
struct PolarToken {
    std::string term;
    double valence = 0.0;
    double arousal = 0.0;
    Polarity polarity = Polarity::Neutral;
    int occurrences = 1;
};

struct BiasScores {
    double arousal_pos = 0.0;
    double arousal_neg = 0.0;
    double arousal_sum = 0.0;
    std::vector<PolarToken> polar_tokens;  // token-level annotation
    double oov_ratio = 0.0;     // calibrated occurrences missing from the lexicon
    bool empty_hypothesis = false;
};

struct EvalRecord {
    std::string issue_id;
    std::string hypothesis;
    std::string reference;
    std::vector<std::string> sources;  // optional, 3 when present
};

struct CorpusBias {
    BiasScores average;                // arithmetic mean over pairs
    std::vector<BiasScores> per_pair;  // in input order
};

/// Hypothesis token types absent from the reference's type set, each with its
/// occurrence count in the hypothesis. Keys follow first occurrence order via
/// the companion vector; the map holds the counts.
struct CalibratedTokens {
    std::vector<std::string> order;  // first-occurrence order
    std::map<std::string, int> counts;
};

CalibratedTokens calibrated_unique_tokens(const TokenSequence& hypothesis,
                                          const TokenSequence& reference);

Polarity classify_polarity(const VadEntry& entry, const BiasConfig& config = {});

/// Runs the calibrated framing-bias measure on one (hypothesis, reference)
/// pair: tokenize both, drop hypothesis tokens whose type appears in the
/// reference, then sum arousal of the remaining in-lexicon polar tokens into
/// positive and negative accumulators. Throws ConfigError on an empty lexicon.
BiasScores score_pair(const std::string& hypothesis, const std::string& reference,
                      const VadLexicon& lexicon, const BiasConfig& config = {});

/// Per-pair scores averaged arithmetically, pairs evaluated in input order.
/// Throws ArgumentError on an empty corpus.
CorpusBias score_corpus(const std::vector<EvalRecord>& pairs, const VadLexicon& lexicon,
                        const BiasConfig& config = {});

}  // namespace neus
