#pragma once

#include <string>
#include <vector>

#include "neus/textproc.hpp"

namespace neus {

using Matrix = std::vector<std::vector<double>>;

struct LexRankOptions {
    double damping = 0.85;
    double tolerance = 1e-6;
    int max_iterations = 200;
    int max_words = 80;
};

struct SentenceGraph {
    SentenceList sentences;
    Matrix similarity;               // symmetric, unit diagonal
    std::vector<double> centrality;  // non-negative, sums to 1
};

/// Pairwise TF-IDF cosine similarities of the given sentences. IDF is
/// computed over the input collection as ln((1+N)/(1+df)) + 1; the diagonal
/// is forced to 1. Throws ArgumentError on empty input.
Matrix tfidf_cosine_matrix(const SentenceList& sentences);

/// Stationary distribution of the row-normalized similarity matrix:
/// p <- d/N + (1-d) * M^T p, iterated until the L1 change drops below tol.
std::vector<double> lexrank_centrality(const Matrix& similarity, double damping = 0.85,
                                       double tolerance = 1e-6, int max_iterations = 200);

SentenceGraph build_sentence_graph(const SentenceList& sentences,
                                   const LexRankOptions& options = {});

/// Extractive summary: pools sentences from all articles, ranks them by
/// centrality (ties to the earlier document position), greedily takes top
/// sentences within the word budget (always at least one), and re-orders the
/// selection by original position.
std::string extract_summary(const std::vector<std::string>& articles, int max_words,
                            const LexRankOptions& options = {});

}  // namespace neus
