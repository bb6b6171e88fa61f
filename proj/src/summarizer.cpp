#include "neus/summarizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "neus/errors.hpp"

namespace neus {

namespace {

using TermWeights = std::unordered_map<std::string, double>;

double dot(const TermWeights& a, const TermWeights& b) {
    const TermWeights& small = a.size() <= b.size() ? a : b;
    const TermWeights& large = a.size() <= b.size() ? b : a;
    double sum = 0.0;
    for (const auto& [term, w] : small) {
        auto it = large.find(term);
        if (it != large.end()) sum += w * it->second;
    }
    return sum;
}

int count_words(const std::string& sentence) {
    return static_cast<int>(tokenize(sentence).tokens.size());
}

}  // namespace

Matrix tfidf_cosine_matrix(const SentenceList& sentences) {
    const std::size_t n = sentences.sentences.size();
    if (n == 0) throw ArgumentError("tfidf_cosine_matrix: no sentences");

    std::vector<TermWeights> tf(n);
    std::unordered_map<std::string, int> df;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& token : tokenize(sentences.sentences[i]).tokens) {
            if (tf[i][token]++ == 0.0) ++df[token];
        }
    }

    const double num = 1.0 + static_cast<double>(n);
    std::vector<double> norm(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& [term, weight] : tf[i]) {
            weight *= std::log(num / (1.0 + df[term])) + 1.0;
            norm[i] += weight * weight;
        }
        norm[i] = std::sqrt(norm[i]);
    }

    Matrix sim(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        sim[i][i] = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double s = 0.0;
            if (norm[i] > 0.0 && norm[j] > 0.0) {
                s = dot(tf[i], tf[j]) / (norm[i] * norm[j]);
            }
            sim[i][j] = sim[j][i] = s;
        }
    }
    return sim;
}

std::vector<double> lexrank_centrality(const Matrix& similarity, double damping,
                                       double tolerance, int max_iterations) {
    const std::size_t n = similarity.size();
    if (n == 0) throw ArgumentError("lexrank_centrality: empty matrix");
    for (const auto& row : similarity) {
        if (row.size() != n) throw ArgumentError("lexrank_centrality: matrix not square");
    }
    if (damping <= 0.0 || damping >= 1.0)
        throw ArgumentError("lexrank_centrality: damping must be in (0,1)");

    // Row-normalize; an all-zero row falls back to the uniform distribution.
    Matrix transition(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = std::accumulate(similarity[i].begin(), similarity[i].end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            transition[i][j] = row_sum > 0.0 ? similarity[i][j] / row_sum
                                             : 1.0 / static_cast<double>(n);
        }
    }

    const double uniform = 1.0 / static_cast<double>(n);
    std::vector<double> p(n, uniform), next(n, 0.0);
    for (int iter = 0; iter < max_iterations; ++iter) {
        for (std::size_t j = 0; j < n; ++j) {
            double mass = 0.0;
            for (std::size_t i = 0; i < n; ++i) mass += transition[i][j] * p[i];
            next[j] = damping * uniform + (1.0 - damping) * mass;
        }
        double change = 0.0;
        for (std::size_t j = 0; j < n; ++j) change += std::fabs(next[j] - p[j]);
        p.swap(next);
        if (change < tolerance) break;
    }
    return p;
}

SentenceGraph build_sentence_graph(const SentenceList& sentences,
                                   const LexRankOptions& options) {
    SentenceGraph graph;
    graph.sentences = sentences;
    graph.similarity = tfidf_cosine_matrix(sentences);
    graph.centrality = lexrank_centrality(graph.similarity, options.damping,
                                          options.tolerance, options.max_iterations);
    return graph;
}

std::string extract_summary(const std::vector<std::string>& articles, int max_words,
                            const LexRankOptions& options) {
    if (max_words < 1) throw ArgumentError("extract_summary: max_words must be positive");

    SentenceList pooled;
    for (const auto& article : articles) {
        for (auto& sentence : split_sentences(article).sentences) {
            pooled.sentences.push_back(std::move(sentence));
        }
    }
    if (pooled.sentences.empty()) {
        throw ArgumentError("extract_summary: no sentences in input articles");
    }

    SentenceGraph graph = build_sentence_graph(pooled, options);

    std::vector<std::size_t> ranked(pooled.sentences.size());
    std::iota(ranked.begin(), ranked.end(), 0);
    std::sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
        if (graph.centrality[a] != graph.centrality[b])
            return graph.centrality[a] > graph.centrality[b];
        return a < b;  // ties: earlier document position wins
    });

    std::vector<std::size_t> selected;
    int words = 0;
    for (std::size_t idx : ranked) {
        int len = count_words(pooled.sentences[idx]);
        if (!selected.empty() && words + len > max_words) break;
        selected.push_back(idx);
        words += len;
    }

    std::sort(selected.begin(), selected.end());
    std::string summary;
    for (std::size_t idx : selected) {
        if (!summary.empty()) summary += ' ';
        summary += pooled.sentences[idx];
    }
    return summary;
}

}  // namespace neus
