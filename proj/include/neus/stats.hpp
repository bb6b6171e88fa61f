#pragma once

#include <string>
#include <vector>

namespace neus {

enum class Choice { A, B };

/// One A/B sample: the human majority pick and the metric pick derived from
/// the two arousal sums. Ties (equal arousal) resolve to B and are flagged.
struct AbAnnotation {
    std::string sample_id;
    Choice human_choice = Choice::A;
    Choice metric_choice = Choice::A;
    double arousal_a = 0.0;
    double arousal_b = 0.0;
    bool metric_tie = false;
};

AbAnnotation make_annotation(std::string sample_id, Choice human_choice, double arousal_a,
                             double arousal_b);

/// Spearman rank correlation: Pearson correlation of average-ranked values.
/// Throws ArgumentError for length < 2 or mismatched inputs and
/// UndefinedCorrelationError when either side has zero rank variance.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

/// Two-sided p-value for the observed Spearman coefficient: exact permutation
/// enumeration for n <= 8, t-approximation with n-2 degrees of freedom above.
double spearman_pvalue(const std::vector<double>& x, const std::vector<double>& y);

/// Fraction of samples where the human choice matches the metric choice.
/// Metric ties are excluded by default. Throws ArgumentError when no samples
/// remain.
double agreement_rate(const std::vector<AbAnnotation>& annotations,
                      bool exclude_ties = true);

/// Per-sample majority label. Every vote list must have an odd size.
std::vector<Choice> majority_vote(const std::vector<std::vector<Choice>>& votes);

/// Average ranks (1-based); ties receive the mean of their rank range.
std::vector<double> average_ranks(const std::vector<double>& values);

/// Regularized incomplete beta function I_x(a, b), used for the Student-t
/// tail probability.
double incomplete_beta(double a, double b, double x);

}  // namespace neus
