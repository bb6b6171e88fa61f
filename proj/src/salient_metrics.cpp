#include "neus/salient_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "neus/errors.hpp"
#include "neus/textproc.hpp"

namespace neus {

namespace {

double f_measure(double precision, double recall) {
    double denom = precision + recall;
    return denom > 0.0 ? 2.0 * precision * recall / denom : 0.0;
}

std::vector<std::string> rouge_tokens(const std::string& text, const RougeOptions& options) {
    std::vector<std::string> tokens = tokenize(text).tokens;
    if (options.stem) {
        for (auto& t : tokens) t = stem_token(t);
    }
    return tokens;
}

int clipped_overlap(const NgramCounts& hyp, const NgramCounts& ref) {
    int overlap = 0;
    for (const auto& [gram, count] : hyp) {
        auto it = ref.find(gram);
        if (it != ref.end()) overlap += std::min(count, it->second);
    }
    return overlap;
}

int total_count(const NgramCounts& counts) {
    int total = 0;
    for (const auto& [gram, count] : counts) total += count;
    return total;
}

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.empty() || b.empty()) return 0;
    std::vector<std::size_t> prev(b.size() + 1, 0), curr(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], curr[j - 1]);
        }
        std::swap(prev, curr);
    }
    return prev[b.size()];
}

}  // namespace

std::string stem_token(const std::string& token) {
    auto ends_with = [&](std::string_view suffix) {
        return token.size() > suffix.size() + 2 &&
               token.compare(token.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with("ing")) return token.substr(0, token.size() - 3);
    if (ends_with("ies")) return token.substr(0, token.size() - 3) + "y";
    if (ends_with("ed")) return token.substr(0, token.size() - 2);
    if (ends_with("es")) return token.substr(0, token.size() - 2);
    if (ends_with("s") && token[token.size() - 2] != 's')
        return token.substr(0, token.size() - 1);
    return token;
}

RougeScore rouge_n(const std::string& hypothesis, const std::string& reference, int n,
                   const RougeOptions& options) {
    if (n != 1 && n != 2) throw ArgumentError("rouge_n supports n in {1,2}");

    NgramCounts hyp = ngram_counts(rouge_tokens(hypothesis, options), n);
    NgramCounts ref = ngram_counts(rouge_tokens(reference, options), n);

    RougeScore score;
    int ref_total = total_count(ref);
    if (ref_total == 0) return score;

    int hyp_total = total_count(hyp);
    int overlap = clipped_overlap(hyp, ref);
    score.recall = static_cast<double>(overlap) / ref_total;
    score.precision = hyp_total > 0 ? static_cast<double>(overlap) / hyp_total : 0.0;
    score.f1 = f_measure(score.precision, score.recall);
    return score;
}

RougeScore rouge_l(const std::string& hypothesis, const std::string& reference,
                   const RougeOptions& options) {
    std::vector<std::string> hyp = rouge_tokens(hypothesis, options);
    std::vector<std::string> ref = rouge_tokens(reference, options);

    RougeScore score;
    if (ref.empty()) return score;

    double lcs = static_cast<double>(lcs_length(hyp, ref));
    score.recall = lcs / ref.size();
    score.precision = hyp.empty() ? 0.0 : lcs / hyp.size();
    score.f1 = f_measure(score.precision, score.recall);
    return score;
}

BleuScore bleu(const std::vector<std::string>& hypotheses,
               const std::vector<std::string>& references) {
    if (hypotheses.empty()) throw ArgumentError("bleu: empty hypothesis list");
    if (hypotheses.size() != references.size())
        throw ArgumentError("bleu: hypothesis/reference count mismatch");

    long matches[4] = {0, 0, 0, 0};
    long totals[4] = {0, 0, 0, 0};
    long hyp_len = 0, ref_len = 0;

    for (std::size_t i = 0; i < hypotheses.size(); ++i) {
        std::vector<std::string> hyp = tokenize(hypotheses[i]).tokens;
        std::vector<std::string> ref = tokenize(references[i]).tokens;
        hyp_len += static_cast<long>(hyp.size());
        ref_len += static_cast<long>(ref.size());
        for (int n = 1; n <= 4; ++n) {
            NgramCounts hgrams = ngram_counts(hyp, n);
            NgramCounts rgrams = ngram_counts(ref, n);
            matches[n - 1] += clipped_overlap(hgrams, rgrams);
            totals[n - 1] += total_count(hgrams);
        }
    }

    BleuScore result;
    if (hyp_len == 0) return result;  // degenerate corpus: score 0, bp 1

    double log_sum = 0.0;
    for (int n = 1; n <= 4; ++n) {
        double p;
        if (matches[n - 1] == 0 && n >= 2) {
            p = 1.0 / static_cast<double>(totals[n - 1] + 1);  // add-one smoothing
        } else if (totals[n - 1] > 0) {
            p = static_cast<double>(matches[n - 1]) / static_cast<double>(totals[n - 1]);
        } else {
            p = 0.0;
        }
        result.precisions[n - 1] = p;
        log_sum = p > 0.0 ? log_sum + 0.25 * std::log(p) : -HUGE_VAL;
    }

    result.brevity_penalty =
        hyp_len > ref_len ? 1.0
                          : std::exp(1.0 - static_cast<double>(ref_len) / hyp_len);
    result.score = log_sum == -HUGE_VAL ? 0.0 : result.brevity_penalty * std::exp(log_sum);
    return result;
}

}  // namespace neus
