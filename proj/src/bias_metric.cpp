#include "neus/bias_metric.hpp"

#include <unordered_set>

#include "neus/errors.hpp"

namespace neus {

CalibratedTokens calibrated_unique_tokens(const TokenSequence& hypothesis,
                                          const TokenSequence& reference) {
    std::unordered_set<std::string_view> ref_types;
    ref_types.reserve(reference.tokens.size());
    for (const auto& t : reference.tokens) ref_types.insert(t);

    CalibratedTokens result;
    for (const auto& t : hypothesis.tokens) {
        if (ref_types.count(t)) continue;
        auto [it, inserted] = result.counts.try_emplace(t, 0);
        if (inserted) result.order.push_back(t);
        ++it->second;
    }
    return result;
}

Polarity classify_polarity(const VadEntry& entry, const BiasConfig& config) {
    if (entry.valence > config.pos_threshold) return Polarity::Positive;
    if (entry.valence < config.neg_threshold) return Polarity::Negative;
    return Polarity::Neutral;
}

BiasScores score_pair(const std::string& hypothesis, const std::string& reference,
                      const VadLexicon& lexicon, const BiasConfig& config) {
    if (lexicon.empty()) throw ConfigError("bias metric needs a non-empty lexicon");

    TokenSequence hyp = tokenize(hypothesis);
    TokenSequence ref = tokenize(reference);

    BiasScores scores;
    if (hyp.tokens.empty()) {
        scores.empty_hypothesis = true;
        return scores;
    }

    CalibratedTokens calibrated = calibrated_unique_tokens(hyp, ref);
    long total_occ = 0;
    long oov_occ = 0;
    for (const auto& term : calibrated.order) {
        int occurrences = calibrated.counts.at(term);
        total_occ += occurrences;
        auto entry = lexicon.lookup(term);
        if (!entry) {
            oov_occ += occurrences;
            continue;
        }
        Polarity polarity = classify_polarity(*entry, config);
        if (polarity == Polarity::Neutral) continue;

        double weight = config.count_mode == CountMode::Occurrence
                            ? static_cast<double>(occurrences)
                            : 1.0;
        double contribution = entry->arousal * weight;
        if (polarity == Polarity::Positive) {
            scores.arousal_pos += contribution;
        } else {
            scores.arousal_neg += contribution;
        }
        scores.polar_tokens.push_back(
            PolarToken{term, entry->valence, entry->arousal, polarity, occurrences});
    }
    scores.arousal_sum = scores.arousal_pos + scores.arousal_neg;
    scores.oov_ratio = total_occ > 0 ? static_cast<double>(oov_occ) / total_occ : 0.0;
    return scores;
}

CorpusBias score_corpus(const std::vector<EvalRecord>& pairs, const VadLexicon& lexicon,
                        const BiasConfig& config) {
    if (pairs.empty()) throw ArgumentError("score_corpus: empty corpus");

    CorpusBias result;
    result.per_pair.reserve(pairs.size());
    double sum_pos = 0.0, sum_neg = 0.0;
    for (const auto& record : pairs) {
        BiasScores s = score_pair(record.hypothesis, record.reference, lexicon, config);
        sum_pos += s.arousal_pos;
        sum_neg += s.arousal_neg;
        result.per_pair.push_back(std::move(s));
    }
    const double n = static_cast<double>(pairs.size());
    result.average.arousal_pos = sum_pos / n;
    result.average.arousal_neg = sum_neg / n;
    result.average.arousal_sum = result.average.arousal_pos + result.average.arousal_neg;
    return result;
}

}  // namespace neus
