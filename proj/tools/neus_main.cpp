// Command-line surface for the framing-bias evaluation toolkit.
//
// Subcommands: evaluate, summarize, format, correlate. Exit codes:
// 0 success, 1 usage/argument, 2 I/O, 3 validation/parse.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "neus/errors.hpp"
#include "neus/pipelines.hpp"

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw neus::IoError("cannot open output file: " + path.string());
    out << content;
    if (!out) throw neus::IoError("error while writing: " + path.string());
}

std::string default_lexicon_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("NEUS_LEXICON"); env && *env) return env;
    return "";
}

int run(int argc, char** argv) {
    CLI::App app{"Framing-bias and salient-info evaluation for multi-news summaries"};
    app.require_subcommand(1);

    // evaluate
    std::string ev_corpus, ev_hypotheses, ev_lexicon, ev_feqa, ev_out = "eval-out";
    std::string ev_system, ev_baseline, ev_count_mode = "occurrence";
    double ev_pos = 0.65, ev_neg = 0.35;
    auto* evaluate = app.add_subcommand(
        "evaluate", "Score hypotheses against neutral references; write a report");
    evaluate->add_option("--corpus", ev_corpus, "Corpus JSONL file")->required();
    evaluate->add_option("--hypotheses", ev_hypotheses,
                         "Hypotheses JSONL ({issue_id, text})");
    evaluate->add_option("--lexicon", ev_lexicon,
                         "VAD lexicon TSV (default: $NEUS_LEXICON)");
    evaluate->add_option("--baseline", ev_baseline,
                         "Built-in baseline instead of --hypotheses: all-source");
    evaluate->add_option("--count-mode", ev_count_mode,
                         "Polar token counting: occurrence|type");
    evaluate->add_option("--pos-threshold", ev_pos, "Positive valence threshold");
    evaluate->add_option("--neg-threshold", ev_neg, "Negative valence threshold");
    evaluate->add_option("--feqa-scores", ev_feqa,
                         "Externally computed FeQA scores (JSON)");
    evaluate->add_option("--system-name", ev_system, "Report row label");
    evaluate->add_option("--out", ev_out, "Output directory");

    // summarize
    std::string su_corpus, su_out = "hypotheses.jsonl";
    int su_max_words = 80;
    auto* summarize = app.add_subcommand(
        "summarize", "LexRank extractive baseline over each triplet's articles");
    summarize->add_option("--corpus", su_corpus, "Corpus JSONL file")->required();
    summarize->add_option("--max-words", su_max_words, "Summary word budget");
    summarize->add_option("--out", su_out, "Hypotheses JSONL output path");

    // format
    std::string fo_corpus, fo_out = "mtl";
    std::uint64_t fo_seed = 0;
    auto* format = app.add_subcommand(
        "format", "Emit hierarchical source/target training pairs");
    format->add_option("--corpus", fo_corpus, "Corpus JSONL file")->required();
    format->add_option("--seed", fo_seed, "Shuffle seed for source order");
    format->add_option("--out", fo_out, "Output prefix (writes <prefix>.src/.tgt)");

    // correlate
    std::string co_annotations, co_out;
    auto* correlate = app.add_subcommand(
        "correlate", "Human-vs-metric agreement statistics over A/B annotations");
    correlate->add_option("--annotations", co_annotations, "Annotation JSONL file")
        ->required();
    correlate->add_option("--out", co_out, "Optional JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (evaluate->parsed()) {
        neus::EvaluateOptions options;
        options.corpus_path = ev_corpus;
        options.hypotheses_path = ev_hypotheses;
        options.lexicon_path = default_lexicon_path(ev_lexicon);
        options.feqa_scores_path = ev_feqa;
        options.system_name = ev_system;
        options.config.bias.pos_threshold = ev_pos;
        options.config.bias.neg_threshold = ev_neg;

        if (options.lexicon_path.empty()) {
            throw neus::ArgumentError("no lexicon: pass --lexicon or set NEUS_LEXICON");
        }
        if (ev_count_mode == "occurrence") {
            options.config.bias.count_mode = neus::CountMode::Occurrence;
        } else if (ev_count_mode == "type") {
            options.config.bias.count_mode = neus::CountMode::Type;
        } else {
            throw neus::ArgumentError("--count-mode must be 'occurrence' or 'type'");
        }
        if (ev_baseline.empty()) {
            if (ev_hypotheses.empty()) {
                throw neus::ArgumentError("pass --hypotheses or --baseline all-source");
            }
        } else if (ev_baseline == "all-source") {
            options.baseline = neus::Baseline::AllSource;
        } else {
            throw neus::ArgumentError("unknown baseline: " + ev_baseline);
        }

        neus::EvaluateResult result = neus::run_evaluate(options);
        fs::path out_dir(ev_out);
        write_file(out_dir / "report.json", result.report_json);
        write_file(out_dir / "report.md", result.report_markdown);
        write_file(out_dir / "annotations.jsonl", result.annotations_jsonl);

        std::cout << result.report_markdown;
        if (!result.report.skipped_ids.empty()) {
            std::cerr << "skipped " << result.report.skipped_ids.size()
                      << " hypothesis id(s) absent from the corpus\n";
        }
        std::cout << "report written to " << (out_dir / "report.json").string() << "\n";
        return 0;
    }

    if (summarize->parsed()) {
        neus::SummarizeOptions options{su_corpus, su_max_words};
        neus::SummarizeResult result = neus::run_summarize(options);
        write_file(su_out, result.hypotheses_jsonl);
        for (const auto& [id, reason] : result.failures) {
            std::cerr << "skipped issue " << id << ": " << reason << "\n";
        }
        std::cout << "wrote " << result.n_written << " summaries to " << su_out << "\n";
        return 0;
    }

    if (format->parsed()) {
        neus::FormatResult result = neus::run_format({fo_corpus, fo_seed});
        write_file(fo_out + ".src", result.src);
        write_file(fo_out + ".tgt", result.tgt);
        std::cout << "wrote " << result.n_examples << " examples to " << fo_out
                  << ".src/.tgt\n";
        return 0;
    }

    neus::CorrelationReport report = neus::run_correlate(co_annotations);
    std::string json = neus::correlation_report_json(report);
    if (!co_out.empty()) write_file(co_out, json);
    std::cout << json;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const neus::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const neus::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const neus::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const neus::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
