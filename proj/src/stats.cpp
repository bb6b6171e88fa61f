#include "neus/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "neus/errors.hpp"

namespace neus {

namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) {
        throw UndefinedCorrelationError("correlation undefined: zero rank variance");
    }
    return sxy / std::sqrt(sxx * syy);
}

void check_inputs(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw ArgumentError("spearman: length mismatch");
    if (x.size() < 2) throw ArgumentError("spearman: need at least 2 samples");
}

// Continued fraction for the incomplete beta function (Lentz's method).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 200;
    constexpr double kEps = 3e-14;
    constexpr double kFpMin = 1e-300;

    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

double student_t_two_sided(double t, double dof) {
    double x = dof / (dof + t * t);
    return incomplete_beta(dof / 2.0, 0.5, x);
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_beta = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                     a * std::log(x) + b * std::log(1.0 - x);
    double front = std::exp(ln_beta);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * betacf(a, b, x) / a;
    }
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

std::vector<double> average_ranks(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });

    std::vector<double> ranks(values.size(), 0.0);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    check_inputs(x, y);
    return pearson(average_ranks(x), average_ranks(y));
}

double spearman_pvalue(const std::vector<double>& x, const std::vector<double>& y) {
    check_inputs(x, y);
    const std::size_t n = x.size();
    std::vector<double> rx = average_ranks(x);
    std::vector<double> ry = average_ranks(y);
    double observed = std::fabs(pearson(rx, ry));

    if (n <= 8) {
        // Exact permutation test: enumerate all orderings of y's ranks.
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        long exceed = 0, total = 0;
        std::vector<double> permuted(n);
        do {
            for (std::size_t i = 0; i < n; ++i) permuted[i] = ry[perm[i]];
            double rho = std::fabs(pearson(rx, permuted));
            if (rho >= observed - 1e-12) ++exceed;
            ++total;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return static_cast<double>(exceed) / static_cast<double>(total);
    }

    double dof = static_cast<double>(n) - 2.0;
    double r2 = std::min(observed * observed, 1.0 - 1e-15);
    double t = observed * std::sqrt(dof / (1.0 - r2));
    return student_t_two_sided(t, dof);
}

AbAnnotation make_annotation(std::string sample_id, Choice human_choice, double arousal_a,
                             double arousal_b) {
    AbAnnotation ann;
    ann.sample_id = std::move(sample_id);
    ann.human_choice = human_choice;
    ann.arousal_a = arousal_a;
    ann.arousal_b = arousal_b;
    ann.metric_tie = arousal_a == arousal_b;
    ann.metric_choice = arousal_a > arousal_b ? Choice::A : Choice::B;
    return ann;
}

double agreement_rate(const std::vector<AbAnnotation>& annotations, bool exclude_ties) {
    if (annotations.empty()) throw ArgumentError("agreement_rate: no annotations");
    std::size_t considered = 0;
    std::size_t agree = 0;
    for (const auto& ann : annotations) {
        if (exclude_ties && ann.metric_tie) continue;
        ++considered;
        if (ann.human_choice == ann.metric_choice) ++agree;
    }
    if (considered == 0) throw ArgumentError("agreement_rate: all samples are metric ties");
    return static_cast<double>(agree) / static_cast<double>(considered);
}

std::vector<Choice> majority_vote(const std::vector<std::vector<Choice>>& votes) {
    std::vector<Choice> result;
    result.reserve(votes.size());
    for (const auto& sample : votes) {
        if (sample.empty() || sample.size() % 2 == 0) {
            throw ArgumentError("majority_vote: vote count must be odd");
        }
        std::size_t count_a = 0;
        for (Choice c : sample) {
            if (c == Choice::A) ++count_a;
        }
        result.push_back(2 * count_a > sample.size() ? Choice::A : Choice::B);
    }
    return result;
}

}  // namespace neus
