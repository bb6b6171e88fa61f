#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neus/bias_metric.hpp"
#include "neus/salient_metrics.hpp"
#include "neus/stats.hpp"

namespace neus {

struct EvalConfig {
    BiasConfig bias;
    RougeOptions rouge;
};

/// Deterministic hash of everything that changes metric semantics:
/// thresholds, count mode, tokenizer version, ROUGE stemming.
std::string config_fingerprint(const EvalConfig& config);

/// One corpus-level report row: framing bias, salient-info scores, and the
/// optional externally supplied FeQA score.
struct MetricReport {
    std::string system_name;
    BiasScores bias;  // corpus-averaged
    double bleu = 0.0;
    RougeScore rouge1;
    RougeScore rouge2;
    RougeScore rouge_l;
    std::optional<double> feqa_external;
    std::size_t n_pairs = 0;
    std::string config_fingerprint;
    double lexicon_coverage = 0.0;  // diagnostic
    double oov_ratio = 0.0;         // diagnostic
    std::size_t empty_hypotheses = 0;
    std::vector<std::string> skipped_ids;
};

enum class Baseline { None, AllSource };

struct EvaluateOptions {
    std::string corpus_path;
    std::string hypotheses_path;  // unused for the all-source baseline
    std::string lexicon_path;
    std::string feqa_scores_path;
    std::string system_name;  // default: hypotheses file stem / baseline name
    Baseline baseline = Baseline::None;
    EvalConfig config;
};

struct EvaluateResult {
    MetricReport report;
    std::string report_json;
    std::string report_markdown;
    std::string annotations_jsonl;
};

EvaluateResult run_evaluate(const EvaluateOptions& options);

struct SummarizeOptions {
    std::string corpus_path;
    int max_words = 80;
};

struct SummarizeResult {
    std::string hypotheses_jsonl;
    std::vector<std::pair<std::string, std::string>> failures;  // (issue_id, reason)
    std::size_t n_written = 0;
};

SummarizeResult run_summarize(const SummarizeOptions& options);

struct FormatOptions {
    std::string corpus_path;
    std::uint64_t seed = 0;
};

struct FormatResult {
    std::string src;  // one serialized input per line
    std::string tgt;  // line-aligned targets
    std::size_t n_examples = 0;
};

FormatResult run_format(const FormatOptions& options);

struct CorrelationReport {
    double spearman = 0.0;
    double p_value = 1.0;
    double agreement = 0.0;
    std::size_t tie_count = 0;
    std::size_t n_samples = 0;
};

/// Parses A/B annotation JSONL ({sample_id, votes, arousal_a, arousal_b}),
/// applies majority vote, and correlates human vote margins with metric
/// arousal margins.
CorrelationReport run_correlate(const std::string& annotations_path);

std::string correlation_report_json(const CorrelationReport& report);

}  // namespace neus
