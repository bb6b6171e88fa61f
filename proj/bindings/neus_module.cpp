#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "neus/bias_metric.hpp"
#include "neus/corpus.hpp"
#include "neus/errors.hpp"
#include "neus/lexicon.hpp"
#include "neus/pipelines.hpp"
#include "neus/salient_metrics.hpp"
#include "neus/stats.hpp"
#include "neus/summarizer.hpp"
#include "neus/textproc.hpp"

namespace py = pybind11;

namespace {

neus::BiasConfig make_config(double pos_threshold, double neg_threshold,
                             const std::string& count_mode) {
    neus::BiasConfig config;
    config.pos_threshold = pos_threshold;
    config.neg_threshold = neg_threshold;
    if (count_mode == "occurrence") {
        config.count_mode = neus::CountMode::Occurrence;
    } else if (count_mode == "type") {
        config.count_mode = neus::CountMode::Type;
    } else {
        throw neus::ArgumentError("count_mode must be 'occurrence' or 'type'");
    }
    return config;
}

neus::SourceOrder parse_order(const std::string& order) {
    if (order.size() != 3) throw neus::ArgumentError("order must be 3 of {L,C,R}");
    neus::SourceOrder result{};
    for (std::size_t i = 0; i < 3; ++i) {
        switch (order[i]) {
            case 'L': result[i] = neus::Leaning::Left; break;
            case 'C': result[i] = neus::Leaning::Center; break;
            case 'R': result[i] = neus::Leaning::Right; break;
            default: throw neus::ArgumentError("order must be 3 of {L,C,R}");
        }
    }
    return result;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Framing-bias and salient-info metrics for multi-news summarization";

    py::register_exception<neus::ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<neus::IoError>(m, "IoError", PyExc_IOError);
    py::register_exception<neus::ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<neus::VadEntry>(m, "VadEntry")
        .def_readonly("term", &neus::VadEntry::term)
        .def_readonly("valence", &neus::VadEntry::valence)
        .def_readonly("arousal", &neus::VadEntry::arousal)
        .def_readonly("dominance", &neus::VadEntry::dominance)
        .def("__repr__", [](const neus::VadEntry& e) {
            return "VadEntry(term='" + e.term + "', v=" + std::to_string(e.valence) +
                   ", a=" + std::to_string(e.arousal) + ", d=" +
                   std::to_string(e.dominance) + ")";
        });

    py::class_<neus::VadLexicon>(m, "Lexicon")
        .def_static("load", &neus::load_lexicon, py::arg("path"))
        .def_static(
            "from_entries",
            [](const std::map<std::string, std::tuple<double, double, double>>& entries,
               const std::string& source_name) {
                std::unordered_map<std::string, neus::VadEntry> map;
                for (const auto& [term, vad] : entries) {
                    auto [v, a, d] = vad;
                    map.emplace(term, neus::VadEntry{term, v, a, d});
                }
                return neus::VadLexicon(std::move(map), source_name);
            },
            py::arg("entries"), py::arg("source_name") = "inline")
        .def("lookup", &neus::VadLexicon::lookup, py::arg("token"))
        .def("coverage", &neus::VadLexicon::coverage, py::arg("tokens"))
        .def("__len__", &neus::VadLexicon::size)
        .def_property_readonly("source_name", &neus::VadLexicon::source_name)
        .def_property_readonly("duplicate_count", &neus::VadLexicon::duplicate_count);

    py::class_<neus::PolarToken>(m, "PolarToken")
        .def_readonly("term", &neus::PolarToken::term)
        .def_readonly("valence", &neus::PolarToken::valence)
        .def_readonly("arousal", &neus::PolarToken::arousal)
        .def_readonly("occurrences", &neus::PolarToken::occurrences)
        .def_property_readonly("polarity", [](const neus::PolarToken& t) {
            return t.polarity == neus::Polarity::Positive ? "positive" : "negative";
        });

    py::class_<neus::BiasScores>(m, "BiasScores")
        .def_readonly("arousal_pos", &neus::BiasScores::arousal_pos)
        .def_readonly("arousal_neg", &neus::BiasScores::arousal_neg)
        .def_readonly("arousal_sum", &neus::BiasScores::arousal_sum)
        .def_readonly("polar_tokens", &neus::BiasScores::polar_tokens)
        .def_readonly("oov_ratio", &neus::BiasScores::oov_ratio)
        .def_readonly("empty_hypothesis", &neus::BiasScores::empty_hypothesis);

    py::class_<neus::RougeScore>(m, "RougeScore")
        .def_readonly("recall", &neus::RougeScore::recall)
        .def_readonly("precision", &neus::RougeScore::precision)
        .def_readonly("f1", &neus::RougeScore::f1);

    py::class_<neus::BleuScore>(m, "BleuScore")
        .def_readonly("score", &neus::BleuScore::score)
        .def_readonly("brevity_penalty", &neus::BleuScore::brevity_penalty)
        .def_readonly("precisions", &neus::BleuScore::precisions);

    m.def(
        "tokenize",
        [](const std::string& text) { return neus::tokenize(text).tokens; },
        py::arg("text"));
    m.def(
        "split_sentences",
        [](const std::string& text) { return neus::split_sentences(text).sentences; },
        py::arg("text"));

    m.def(
        "score_pair",
        [](const std::string& hypothesis, const std::string& reference,
           const neus::VadLexicon& lexicon, double pos_threshold, double neg_threshold,
           const std::string& count_mode) {
            return neus::score_pair(hypothesis, reference, lexicon,
                                    make_config(pos_threshold, neg_threshold, count_mode));
        },
        py::arg("hypothesis"), py::arg("reference"), py::arg("lexicon"),
        py::arg("pos_threshold") = 0.65, py::arg("neg_threshold") = 0.35,
        py::arg("count_mode") = "occurrence");

    m.def(
        "score_corpus",
        [](const std::vector<std::pair<std::string, std::string>>& pairs,
           const neus::VadLexicon& lexicon, double pos_threshold, double neg_threshold,
           const std::string& count_mode) {
            std::vector<neus::EvalRecord> records;
            records.reserve(pairs.size());
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                records.push_back(neus::EvalRecord{std::to_string(i), pairs[i].first,
                                                   pairs[i].second, {}});
            }
            neus::CorpusBias result = neus::score_corpus(
                records, lexicon, make_config(pos_threshold, neg_threshold, count_mode));
            return std::make_pair(result.average, result.per_pair);
        },
        py::arg("pairs"), py::arg("lexicon"), py::arg("pos_threshold") = 0.65,
        py::arg("neg_threshold") = 0.35, py::arg("count_mode") = "occurrence",
        "Returns (corpus_average, per_pair_scores).");

    m.def(
        "rouge_n",
        [](const std::string& hypothesis, const std::string& reference, int n, bool stem) {
            return neus::rouge_n(hypothesis, reference, n, neus::RougeOptions{stem});
        },
        py::arg("hypothesis"), py::arg("reference"), py::arg("n") = 1,
        py::arg("stem") = false);
    m.def(
        "rouge_l",
        [](const std::string& hypothesis, const std::string& reference, bool stem) {
            return neus::rouge_l(hypothesis, reference, neus::RougeOptions{stem});
        },
        py::arg("hypothesis"), py::arg("reference"), py::arg("stem") = false);
    m.def("bleu", &neus::bleu, py::arg("hypotheses"), py::arg("references"));

    m.def("spearman", &neus::spearman, py::arg("x"), py::arg("y"));
    m.def("spearman_pvalue", &neus::spearman_pvalue, py::arg("x"), py::arg("y"));

    m.def("tfidf_cosine_matrix",
          [](const std::vector<std::string>& sentences) {
              return neus::tfidf_cosine_matrix(neus::SentenceList{sentences});
          },
          py::arg("sentences"));
    m.def("lexrank_centrality", &neus::lexrank_centrality, py::arg("similarity"),
          py::arg("damping") = 0.85, py::arg("tolerance") = 1e-6,
          py::arg("max_iterations") = 200);
    m.def(
        "extract_summary",
        [](const std::vector<std::string>& articles, int max_words) {
            return neus::extract_summary(articles, max_words);
        },
        py::arg("articles"), py::arg("max_words") = 80);

    m.def(
        "format_mtl_input",
        [](const std::pair<std::string, std::string>& left,
           const std::pair<std::string, std::string>& center,
           const std::pair<std::string, std::string>& right, const std::string& order) {
            neus::NewsTriplet t;
            t.left = {left.first, left.second};
            t.center = {center.first, center.second};
            t.right = {right.first, right.second};
            return neus::format_mtl_input(t, parse_order(order));
        },
        py::arg("left"), py::arg("center"), py::arg("right"), py::arg("order") = "LCR",
        "Each source is a (title, article) pair.");
    m.def(
        "format_mtl_target",
        [](const std::string& neutral_title, const std::string& neutral_article) {
            neus::NewsTriplet t;
            t.neutral_title = neutral_title;
            t.neutral_article = neutral_article;
            return neus::format_mtl_target(t);
        },
        py::arg("neutral_title"), py::arg("neutral_article"));
    m.def(
        "shuffle_order",
        [](std::uint64_t seed, const std::string& issue_id) {
            std::string out;
            for (neus::Leaning leaning : neus::shuffle_order(seed, issue_id)) {
                out.push_back(neus::leaning_letter(leaning));
            }
            return out;
        },
        py::arg("seed"), py::arg("issue_id"));

    m.attr("__version__") = "0.1.0";
}
