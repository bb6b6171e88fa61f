#include "neus/pipelines.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "neus/corpus.hpp"
#include "neus/errors.hpp"
#include "neus/hashing.hpp"
#include "neus/lexicon.hpp"
#include "neus/summarizer.hpp"
#include "neus/textproc.hpp"

namespace neus {

using nlohmann::json;

namespace {

std::string repr(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr - buf);
}

std::string fixed2(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

std::string file_stem(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = name.find_last_of('.');
    return dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
}

std::vector<std::string> read_jsonl(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + what + " file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (in.bad()) throw IoError(std::string("error while reading ") + what + ": " + path);
    return lines;
}

std::string concat_articles(const NewsTriplet& t) {
    return t.left.article + " " + t.center.article + " " + t.right.article;
}

std::optional<double> load_feqa(const std::string& path,
                                const std::vector<EvalRecord>& records) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open FeQA scores file: " + path);
    json obj;
    try {
        obj = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed FeQA scores JSON: ") + e.what(), 1);
    }

    if (obj.is_object() && obj.contains("feqa") && obj["feqa"].is_number()) {
        return obj["feqa"].get<double>();
    }
    const json& scores = obj.is_object() && obj.contains("scores") ? obj["scores"] : obj;
    if (!scores.is_object()) {
        throw ValidationError("FeQA scores file must hold {\"feqa\": x} or {issue_id: x}");
    }
    double sum = 0.0;
    std::size_t matched = 0;
    for (const auto& record : records) {
        auto it = scores.find(record.issue_id);
        if (it != scores.end() && it->is_number()) {
            sum += it->get<double>();
            ++matched;
        }
    }
    if (matched == 0) {
        throw ValidationError("FeQA scores do not cover any evaluated issue_id");
    }
    return sum / static_cast<double>(matched);
}

const char* polarity_name(Polarity p) {
    return p == Polarity::Positive ? "positive" : p == Polarity::Negative ? "negative"
                                                                          : "neutral";
}

json rouge_json(const RougeScore& score) {
    return {{"recall", score.recall}, {"precision", score.precision}, {"f1", score.f1}};
}

std::string render_report_json(const MetricReport& report, const EvalConfig& config) {
    json doc;
    doc["system_name"] = report.system_name;
    doc["n_pairs"] = report.n_pairs;
    doc["config_fingerprint"] = report.config_fingerprint;
    doc["config"] = {
        {"pos_threshold", config.bias.pos_threshold},
        {"neg_threshold", config.bias.neg_threshold},
        {"count_mode",
         config.bias.count_mode == CountMode::Occurrence ? "occurrence" : "type"},
        {"rouge_stem", config.rouge.stem},
        {"tokenizer_version", kTokenizerVersion},
    };
    doc["bias"] = {
        {"arousal_pos", report.bias.arousal_pos},
        {"arousal_neg", report.bias.arousal_neg},
        {"arousal_sum", report.bias.arousal_sum},
    };
    doc["salient"] = {
        {"bleu", report.bleu},
        {"rouge1", rouge_json(report.rouge1)},
        {"rouge2", rouge_json(report.rouge2)},
        {"rougeL", rouge_json(report.rouge_l)},
    };
    doc["hallucination"] = {
        {"feqa_external",
         report.feqa_external ? json(*report.feqa_external) : json(nullptr)},
    };
    doc["diagnostics"] = {
        {"lexicon_coverage", report.lexicon_coverage},
        {"oov_ratio", report.oov_ratio},
        {"empty_hypotheses", report.empty_hypotheses},
        {"skipped_ids", report.skipped_ids},
    };
    return doc.dump(2) + "\n";
}

std::string render_report_markdown(const MetricReport& report) {
    std::ostringstream md;
    md << "| System | Arousal+ | Arousal- | Arousal_sum | BLEU | ROUGE1-R | FeQA |\n";
    md << "|---|---|---|---|---|---|---|\n";
    md << "| " << report.system_name << " | " << fixed2(report.bias.arousal_pos) << " | "
       << fixed2(report.bias.arousal_neg) << " | " << fixed2(report.bias.arousal_sum)
       << " | " << fixed2(report.bleu * 100.0) << " | "
       << fixed2(report.rouge1.recall * 100.0) << "% | "
       << (report.feqa_external ? fixed2(*report.feqa_external * 100.0) + "%" : "-")
       << " |\n";
    return md.str();
}

std::string render_annotations(const std::vector<EvalRecord>& records,
                               const CorpusBias& bias) {
    std::ostringstream out;
    for (std::size_t i = 0; i < records.size(); ++i) {
        for (const auto& token : bias.per_pair[i].polar_tokens) {
            json line = {
                {"pair_id", records[i].issue_id}, {"term", token.term},
                {"valence", token.valence},       {"arousal", token.arousal},
                {"polarity", polarity_name(token.polarity)},
                {"occurrences", token.occurrences},
            };
            out << line.dump() << '\n';
        }
    }
    return out.str();
}

}  // namespace

std::string config_fingerprint(const EvalConfig& config) {
    std::string canonical = "pos=" + repr(config.bias.pos_threshold) +
                            ";neg=" + repr(config.bias.neg_threshold) + ";count_mode=" +
                            (config.bias.count_mode == CountMode::Occurrence ? "occurrence"
                                                                             : "type") +
                            ";tokenizer=" + kTokenizerVersion +
                            ";rouge_stem=" + (config.rouge.stem ? "1" : "0");
    return hex64(fnv1a64(canonical));
}

EvaluateResult run_evaluate(const EvaluateOptions& options) {
    VadLexicon lexicon = load_lexicon(options.lexicon_path);
    if (lexicon.empty()) throw ConfigError("lexicon is empty: " + options.lexicon_path);

    std::vector<NewsTriplet> triplets = load_corpus(options.corpus_path);
    std::map<std::string, const NewsTriplet*> by_id;
    for (const auto& t : triplets) by_id.emplace(t.issue_id, &t);

    std::vector<EvalRecord> records;
    std::vector<std::string> skipped;
    std::string system_name = options.system_name;

    if (options.baseline == Baseline::AllSource) {
        if (system_name.empty()) system_name = "all-source";
        for (const auto& [id, t] : by_id) {
            records.push_back(EvalRecord{id, concat_articles(*t), t->neutral_article,
                                         {t->left.article, t->center.article,
                                          t->right.article}});
        }
    } else {
        if (system_name.empty()) system_name = file_stem(options.hypotheses_path);
        std::map<std::string, std::string> hypotheses;
        std::size_t lineno = 0;
        for (const auto& line : read_jsonl(options.hypotheses_path, "hypotheses")) {
            ++lineno;
            json obj;
            try {
                obj = json::parse(line);
            } catch (const json::parse_error& e) {
                throw ParseError(std::string("malformed hypotheses JSON: ") + e.what(),
                                 lineno);
            }
            if (!obj.contains("issue_id") || !obj.contains("text")) {
                throw ValidationError("hypotheses line " + std::to_string(lineno) +
                                      ": needs fields 'issue_id' and 'text'");
            }
            hypotheses[obj["issue_id"].get<std::string>()] = obj["text"].get<std::string>();
        }
        for (const auto& [id, text] : hypotheses) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                skipped.push_back(id);
                continue;
            }
            const NewsTriplet* t = it->second;
            records.push_back(EvalRecord{id, text, t->neutral_article,
                                         {t->left.article, t->center.article,
                                          t->right.article}});
        }
    }
    if (records.empty()) {
        throw ValidationError("no hypothesis/reference pairs joined; nothing to evaluate");
    }

    CorpusBias bias = score_corpus(records, lexicon, options.config.bias);

    std::vector<std::string> hyp_texts, ref_texts;
    hyp_texts.reserve(records.size());
    ref_texts.reserve(records.size());
    double r1r = 0, r1p = 0, r1f = 0, r2r = 0, r2p = 0, r2f = 0, rlr = 0, rlp = 0, rlf = 0;
    std::size_t covered = 0, total_tokens = 0;
    for (const auto& record : records) {
        hyp_texts.push_back(record.hypothesis);
        ref_texts.push_back(record.reference);
        RougeScore r1 = rouge_n(record.hypothesis, record.reference, 1, options.config.rouge);
        RougeScore r2 = rouge_n(record.hypothesis, record.reference, 2, options.config.rouge);
        RougeScore rl = rouge_l(record.hypothesis, record.reference, options.config.rouge);
        r1r += r1.recall; r1p += r1.precision; r1f += r1.f1;
        r2r += r2.recall; r2p += r2.precision; r2f += r2.f1;
        rlr += rl.recall; rlp += rl.precision; rlf += rl.f1;

        for (const auto& token : tokenize(record.hypothesis).tokens) {
            ++total_tokens;
            if (lexicon.entries().count(token)) ++covered;
        }
    }
    const double n = static_cast<double>(records.size());

    MetricReport report;
    report.system_name = system_name;
    report.bias = bias.average;
    report.bleu = bleu(hyp_texts, ref_texts).score;
    report.rouge1 = {r1r / n, r1p / n, r1f / n};
    report.rouge2 = {r2r / n, r2p / n, r2f / n};
    report.rouge_l = {rlr / n, rlp / n, rlf / n};
    report.n_pairs = records.size();
    report.config_fingerprint = config_fingerprint(options.config);
    report.skipped_ids = std::move(skipped);
    report.lexicon_coverage =
        total_tokens > 0 ? static_cast<double>(covered) / total_tokens : 0.0;

    double oov_sum = 0.0;
    for (const auto& pair : bias.per_pair) {
        oov_sum += pair.oov_ratio;
        if (pair.empty_hypothesis) ++report.empty_hypotheses;
    }
    report.oov_ratio = oov_sum / n;

    if (!options.feqa_scores_path.empty()) {
        report.feqa_external = load_feqa(options.feqa_scores_path, records);
    }

    EvaluateResult result;
    result.report_json = render_report_json(report, options.config);
    result.report_markdown = render_report_markdown(report);
    result.annotations_jsonl = render_annotations(records, bias);
    result.report = std::move(report);
    return result;
}

SummarizeResult run_summarize(const SummarizeOptions& options) {
    std::vector<NewsTriplet> triplets = load_corpus(options.corpus_path);

    SummarizeResult result;
    std::ostringstream out;
    for (const auto& t : triplets) {
        try {
            std::string summary = extract_summary(
                {t.left.article, t.center.article, t.right.article}, options.max_words);
            json line = {{"issue_id", t.issue_id}, {"text", summary}};
            out << line.dump() << '\n';
            ++result.n_written;
        } catch (const std::exception& e) {
            result.failures.emplace_back(t.issue_id, e.what());
        }
    }
    result.hypotheses_jsonl = out.str();
    return result;
}

FormatResult run_format(const FormatOptions& options) {
    std::vector<NewsTriplet> triplets = load_corpus(options.corpus_path);

    auto flatten = [](std::string text) {
        for (char& c : text) {
            if (c == '\n' || c == '\r') c = ' ';
        }
        return text;
    };

    FormatResult result;
    std::ostringstream src, tgt;
    for (const auto& t : triplets) {
        SourceOrder order = shuffle_order(options.seed, t.issue_id);
        src << flatten(format_mtl_input(t, order)) << '\n';
        tgt << flatten(format_mtl_target(t)) << '\n';
        ++result.n_examples;
    }
    result.src = src.str();
    result.tgt = tgt.str();
    return result;
}

CorrelationReport run_correlate(const std::string& annotations_path) {
    std::vector<std::string> lines = read_jsonl(annotations_path, "annotations");

    std::vector<AbAnnotation> annotations;
    std::vector<double> human_margin, metric_margin;
    std::size_t lineno = 0;
    for (const auto& line : lines) {
        ++lineno;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("malformed annotation JSON: ") + e.what(), lineno);
        }
        for (const char* key : {"sample_id", "votes", "arousal_a", "arousal_b"}) {
            if (!obj.contains(key)) {
                throw ValidationError("annotation line " + std::to_string(lineno) +
                                      ": missing field '" + key + "'");
            }
        }
        std::vector<Choice> votes;
        std::size_t votes_a = 0;
        for (const auto& v : obj["votes"]) {
            std::string s = v.get<std::string>();
            if (s != "A" && s != "B") {
                throw ValidationError("annotation line " + std::to_string(lineno) +
                                      ": votes must be \"A\" or \"B\"");
            }
            votes.push_back(s == "A" ? Choice::A : Choice::B);
            if (s == "A") ++votes_a;
        }
        Choice human = majority_vote({votes}).front();
        double arousal_a = obj["arousal_a"].get<double>();
        double arousal_b = obj["arousal_b"].get<double>();
        annotations.push_back(make_annotation(obj["sample_id"].get<std::string>(), human,
                                              arousal_a, arousal_b));
        double m = static_cast<double>(votes.size());
        human_margin.push_back((2.0 * votes_a - m) / m);
        metric_margin.push_back(arousal_a - arousal_b);
    }
    if (annotations.size() < 2) {
        throw ArgumentError("correlate: need at least 2 annotated samples");
    }

    CorrelationReport report;
    report.n_samples = annotations.size();
    report.spearman = spearman(metric_margin, human_margin);
    report.p_value = spearman_pvalue(metric_margin, human_margin);
    report.agreement = agreement_rate(annotations);
    for (const auto& ann : annotations) {
        if (ann.metric_tie) ++report.tie_count;
    }
    return report;
}

std::string correlation_report_json(const CorrelationReport& report) {
    json doc = {
        {"spearman", report.spearman},   {"p_value", report.p_value},
        {"agreement", report.agreement}, {"metric_ties", report.tie_count},
        {"n_samples", report.n_samples},
    };
    return doc.dump(2) + "\n";
}

}  // namespace neus
