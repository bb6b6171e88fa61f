#pragma once

// Shared desk-scale fixtures: a small VAD lexicon and a five-issue corpus
// whose sources carry polar words that never appear in the neutral targets.
//
// Each issue follows the same shape: a core sentence repeated in all three
// articles (highest LexRank centrality), a mildly polar sentence shared by
// the left and right articles, and strongly polar sentences unique to one
// article. A ~33-word budget therefore selects the core plus one polar
// sentence, landing strictly between the all-source input and the neutral
// reference on the bias scale.

#include <string>
#include <vector>

#include <json.hpp>

#include "neus/corpus.hpp"
#include "test_util.hpp"

namespace fixtures {

inline const char* kLexiconTsv =
    "term\tvalence\tarousal\tdominance\n"
    "murdered\t0.10\t0.90\t0.55\n"
    "outrage\t0.10\t0.80\t0.50\n"
    "slammed\t0.15\t0.75\t0.45\n"
    "frenzy\t0.25\t0.85\t0.40\n"
    "celebrate\t0.90\t0.70\t0.60\n"
    "joyous\t0.95\t0.60\t0.60\n"
    "triumphant\t0.90\t0.80\t0.65\n"
    "table\t0.50\t0.20\t0.50\n"
    "meeting\t0.55\t0.25\t0.50\n"
    "vote\t0.50\t0.30\t0.50\n";

// Arousal mass of the sentence "Critics slammed the vote with outrage."
// relative to the core-sentence reference: slammed 0.75 + outrage 0.80.
inline constexpr double kSharedPolarArousal = 1.55;

inline std::vector<neus::NewsTriplet> five_issue_corpus() {
    using neus::NewsTriplet;
    const std::vector<std::string> fillers = {"harbor", "bridge", "museum", "airport",
                                              "station"};
    std::vector<NewsTriplet> corpus;
    for (std::size_t i = 0; i < fillers.size(); ++i) {
        const std::string& f = fillers[i];
        std::string core = "The committee held a vote on the " + f + " measure.";
        NewsTriplet t;
        t.issue_id = "issue-" + std::to_string(i + 1);
        t.left = {"Left view on the " + f,
                  core + " Critics slammed the vote with outrage." +
                      " Witnesses said the guard murdered a bystander in a frenzy."};
        t.center = {"Center view on the " + f, core + " Officials reviewed the plan."};
        t.right = {"Right view on the " + f,
                   core + " Critics slammed the vote with outrage." +
                       " A joyous triumphant crowd celebrate outside."};
        t.neutral_title = "Neutral take on the " + f;
        t.neutral_article = core;
        corpus.push_back(t);
    }
    return corpus;
}

struct Workspace {
    testutil::TempDir dir;
    std::string lexicon_path;
    std::string corpus_path;

    Workspace() {
        lexicon_path = testutil::write_file(dir.file("vad.tsv"), kLexiconTsv);
        std::string jsonl;
        for (const auto& t : five_issue_corpus()) {
            jsonl += neus::triplet_to_json_line(t) + "\n";
        }
        corpus_path = testutil::write_file(dir.file("corpus.jsonl"), jsonl);
    }

    std::string identity_hypotheses() const {
        std::string jsonl;
        for (const auto& t : five_issue_corpus()) {
            nlohmann::json line = {{"issue_id", t.issue_id}, {"text", t.neutral_article}};
            jsonl += line.dump() + "\n";
        }
        return jsonl;
    }
};

inline const char* kCorrelateJsonl =
    R"({"sample_id":"s0","votes":["A","B","B"],"arousal_a":0.0,"arousal_b":3.0})" "\n"
    R"({"sample_id":"s1","votes":["B","B","B"],"arousal_a":1.0,"arousal_b":2.0})" "\n"
    R"({"sample_id":"s2","votes":["A","A","A"],"arousal_a":3.0,"arousal_b":2.0})" "\n"
    R"({"sample_id":"s3","votes":["A","A","B"],"arousal_a":5.0,"arousal_b":2.0})" "\n";

}  // namespace fixtures
