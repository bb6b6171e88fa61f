#pragma once

#include <array>
#include <string>
#include <vector>

namespace neus {

struct RougeScore {
    double recall = 0.0;
    double precision = 0.0;
    double f1 = 0.0;
};

struct BleuScore {
    double score = 0.0;
    double brevity_penalty = 1.0;
    std::array<double, 4> precisions{0.0, 0.0, 0.0, 0.0};
};

struct RougeOptions {
    // Optional crude suffix stemmer applied to ROUGE tokens only.
    bool stem = false;
};

/// ROUGE-N (n = 1 or 2): clipped n-gram overlap. Recall is measured against
/// the reference n-grams, precision against the hypothesis n-grams. An empty
/// reference n-gram set yields an all-zero score.
RougeScore rouge_n(const std::string& hypothesis, const std::string& reference, int n,
                   const RougeOptions& options = {});

/// ROUGE-L from the longest common subsequence of the token sequences.
RougeScore rouge_l(const std::string& hypothesis, const std::string& reference,
                   const RougeOptions& options = {});

/// Corpus-level BLEU-4 with clipped modified precisions, brevity penalty
/// exp(1 - r/c) for c <= r, and add-one smoothing applied only to zero match
/// counts of order >= 2. Single reference per hypothesis; lists must have the
/// same non-zero length.
BleuScore bleu(const std::vector<std::string>& hypotheses,
               const std::vector<std::string>& references);

/// Simple suffix stemmer used by the ROUGE stem option.
std::string stem_token(const std::string& token);

}  // namespace neus
