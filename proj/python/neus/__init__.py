"""Framing-bias and salient-info metrics for multi-news summarization.

Thin wrapper over the C++ core. The heavy lifting (tokenization, the
calibrated VAD bias metric, ROUGE/BLEU, LexRank, rank statistics) lives in
``neus._core``.
"""

from neus._core import (
    ArgumentError,
    BiasScores,
    BleuScore,
    IoError,
    Lexicon,
    PolarToken,
    RougeScore,
    VadEntry,
    ValidationError,
    __version__,
    bleu,
    extract_summary,
    format_mtl_input,
    format_mtl_target,
    lexrank_centrality,
    rouge_l,
    rouge_n,
    score_corpus,
    score_pair,
    shuffle_order,
    spearman,
    spearman_pvalue,
    split_sentences,
    tfidf_cosine_matrix,
    tokenize,
)

__all__ = [
    "ArgumentError",
    "BiasScores",
    "BleuScore",
    "IoError",
    "Lexicon",
    "PolarToken",
    "RougeScore",
    "VadEntry",
    "ValidationError",
    "__version__",
    "bleu",
    "extract_summary",
    "format_mtl_input",
    "format_mtl_target",
    "lexrank_centrality",
    "rouge_l",
    "rouge_n",
    "score_corpus",
    "score_pair",
    "shuffle_order",
    "spearman",
    "spearman_pvalue",
    "split_sentences",
    "tfidf_cosine_matrix",
    "tokenize",
]
