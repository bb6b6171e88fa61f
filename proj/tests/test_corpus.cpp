#include <doctest.h>

#include <json.hpp>
#include <random>
#include <set>

#include "neus/corpus.hpp"
#include "neus/errors.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace neus;

namespace {

NewsTriplet make_triplet(const std::string& id) {
    NewsTriplet t;
    t.issue_id = id;
    t.left = {"Left title " + id, "Left article body " + id + "."};
    t.center = {"Center title " + id, "Center article body " + id + "."};
    t.right = {"Right title " + id, "Right article body " + id + "."};
    t.neutral_title = "Neutral title " + id;
    t.neutral_article = "Neutral article body " + id + ".";
    return t;
}

std::vector<NewsTriplet> make_corpus(std::size_t n) {
    std::vector<NewsTriplet> corpus;
    for (std::size_t i = 0; i < n; ++i) corpus.push_back(make_triplet("issue-" + std::to_string(i)));
    return corpus;
}

std::string valid_line(const std::string& id) {
    return triplet_to_json_line(make_triplet(id));
}

// Inverse of the MTL serialization, used as the round-trip oracle.
std::vector<std::pair<std::string, std::string>> parse_mtl_input(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t sep = text.find(" [SEP] ", start);
        std::string block =
            sep == std::string::npos ? text.substr(start) : text.substr(start, sep - start);
        REQUIRE(block.rfind("TITLE=> ", 0) == 0);
        REQUIRE(block.back() == '.');
        block = block.substr(8, block.size() - 9);  // strip prefix and final period
        std::size_t mid = block.find(". ARTICLE=> ");
        REQUIRE(mid != std::string::npos);
        pairs.emplace_back(block.substr(0, mid), block.substr(mid + 12));
        if (sep == std::string::npos) break;
        start = sep + 7;
    }
    return pairs;
}

std::pair<std::string, std::string> parse_mtl_target(const std::string& text) {
    REQUIRE(text.rfind("TITLE=> ", 0) == 0);
    std::size_t mid = text.find(". ARTICLE=> ");
    REQUIRE(mid != std::string::npos);
    return {text.substr(8, mid - 8), text.substr(mid + 12)};
}

}  // namespace

TEST_CASE("load_corpus parses valid JSONL") {
    testutil::TempDir dir;
    auto path = testutil::write_file(dir.file("corpus.jsonl"),
                                     valid_line("a") + "\n" + valid_line("b") + "\n");
    auto triplets = load_corpus(path);
    REQUIRE(triplets.size() == 2);
    CHECK(triplets[0].issue_id == "a");
    CHECK(triplets[1].center.title == "Center title b");
}

TEST_CASE("empty corpus file loads as empty list") {
    testutil::TempDir dir;
    CHECK(load_corpus(testutil::write_file(dir.file("empty.jsonl"), "")).empty());
}

TEST_CASE("schema problems name the line and field") {
    testutil::TempDir dir;
    SUBCASE("missing neutral_article") {
        nlohmann::json obj = nlohmann::json::parse(valid_line("a"));
        obj.erase("neutral_article");
        auto path = testutil::write_file(dir.file("bad.jsonl"), obj.dump() + "\n");
        CHECK_THROWS_WITH_AS(load_corpus(path), doctest::Contains("neutral_article"),
                             ValidationError);
    }
    SUBCASE("malformed JSON reports the line number") {
        auto path = testutil::write_file(dir.file("bad.jsonl"),
                                         valid_line("a") + "\n{not json\n");
        CHECK_THROWS_WITH_AS(load_corpus(path), doctest::Contains("line 2"),
                             ValidationError);
    }
    SUBCASE("duplicate issue ids rejected") {
        auto path = testutil::write_file(dir.file("bad.jsonl"),
                                         valid_line("a") + "\n" + valid_line("a") + "\n");
        CHECK_THROWS_WITH_AS(load_corpus(path), doctest::Contains("duplicate"),
                             ValidationError);
    }
    SUBCASE("reserved markers rejected") {
        NewsTriplet t = make_triplet("a");
        t.left.article = "Contains [SEP] inside";
        auto path =
            testutil::write_file(dir.file("bad.jsonl"), triplet_to_json_line(t) + "\n");
        CHECK_THROWS_WITH_AS(load_corpus(path), doctest::Contains("[SEP]"),
                             ValidationError);
    }
    SUBCASE("empty source field rejected") {
        NewsTriplet t = make_triplet("a");
        t.right.title = "   ";
        auto path =
            testutil::write_file(dir.file("bad.jsonl"), triplet_to_json_line(t) + "\n");
        CHECK_THROWS_WITH_AS(load_corpus(path), doctest::Contains("right.title"),
                             ValidationError);
    }
    SUBCASE("bad date rejected") {
        NewsTriplet t = make_triplet("a");
        t.date = "March 5, 2020";
        auto path =
            testutil::write_file(dir.file("bad.jsonl"), triplet_to_json_line(t) + "\n");
        CHECK_THROWS_WITH_AS(load_corpus(path), doctest::Contains("date"), ValidationError);
    }
}

TEST_CASE("corpus save/load round-trip is the identity") {
    testutil::TempDir dir;
    auto corpus = make_corpus(5);
    corpus[1].date = "2020-03-05";
    corpus[1].topics = {"Elections", "White House"};
    corpus[2].media_names = {{"Outlet L", "Outlet C", "Outlet R"}};

    save_corpus(corpus, dir.file("out.jsonl").string());
    auto reloaded = load_corpus(dir.file("out.jsonl").string());
    REQUIRE(reloaded.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(triplet_to_json_line(reloaded[i]) == triplet_to_json_line(corpus[i]));
    }
}

TEST_CASE("split_dataset with explicit fractions partitions the input") {
    auto corpus = make_corpus(3);
    DatasetSplit split = split_dataset(corpus, 1.0 / 3.0, 1.0 / 3.0, 7);
    CHECK(split.train.size() == 1);
    CHECK(split.val.size() == 1);
    CHECK(split.test.size() == 1);
    CHECK(split.unassigned.empty());

    std::mt19937_64 rng(101);
    for (int iter = 0; iter < 20; ++iter) {
        std::size_t n = 1 + rng() % 40;
        auto pool = make_corpus(n);
        DatasetSplit s = split_dataset(pool, 0.5, 0.25, rng());
        CHECK(s.train.size() + s.val.size() + s.test.size() == n);
        std::set<std::string> ids;
        for (const auto* part : {&s.train, &s.val, &s.test}) {
            for (const auto& t : *part) ids.insert(t.issue_id);
        }
        CHECK(ids.size() == n);  // disjoint and complete
    }
}

TEST_CASE("split_dataset is deterministic in the seed") {
    auto corpus = make_corpus(30);
    DatasetSplit a = split_dataset(corpus, 0.6, 0.2, 42);
    DatasetSplit b = split_dataset(corpus, 0.6, 0.2, 42);
    REQUIRE(a.train.size() == b.train.size());
    for (std::size_t i = 0; i < a.train.size(); ++i) {
        CHECK(a.train[i].issue_id == b.train[i].issue_id);
    }
    DatasetSplit c = split_dataset(corpus, 0.6, 0.2, 43);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.train.size() && i < c.train.size(); ++i) {
        if (a.train[i].issue_id != c.train[i].issue_id) any_diff = true;
    }
    CHECK(any_diff);
}

TEST_CASE("split_dataset rejects bad fractions") {
    auto corpus = make_corpus(4);
    CHECK_THROWS_AS(split_dataset(corpus, 0.0, 0.2, 1), ArgumentError);
    CHECK_THROWS_AS(split_dataset(corpus, 0.9, 0.2, 1), ArgumentError);
    CHECK_THROWS_AS(split_dataset(corpus, -0.1, 0.5, 1), ArgumentError);
}

TEST_CASE("published split reproduces the dataset release counts") {
    auto corpus = make_corpus(3564);
    DatasetSplit split = split_dataset_published(corpus, 0);
    CHECK(split.train.size() == 1820);
    CHECK(split.val.size() == 456);
    CHECK(split.test.size() == 1188);
    CHECK(split.train.size() + split.val.size() + split.test.size() +
              split.unassigned.size() ==
          3564);
}

TEST_CASE("format_mtl_input emits the exact block layout") {
    NewsTriplet t;
    t.issue_id = "x";
    t.left = {"T_L", "A_L"};
    t.center = {"T_C", "A_C"};
    t.right = {"T_R", "A_R"};
    t.neutral_title = "T_neu";
    t.neutral_article = "A_neu";

    CHECK(format_mtl_input(t, {Leaning::Left, Leaning::Center, Leaning::Right}) ==
          "TITLE=> T_L. ARTICLE=> A_L. [SEP] TITLE=> T_C. ARTICLE=> A_C. [SEP] "
          "TITLE=> T_R. ARTICLE=> A_R.");
    CHECK(format_mtl_target(t) == "TITLE=> T_neu. ARTICLE=> A_neu");
}

TEST_CASE("any order yields two separators and three title markers") {
    NewsTriplet t = make_triplet("s");
    for (std::uint64_t seed : {0, 1, 2, 3}) {
        std::string text = format_mtl_input(t, shuffle_order(seed, t.issue_id));
        std::size_t seps = 0, titles = 0, pos = 0;
        while ((pos = text.find("[SEP]", pos)) != std::string::npos) {
            ++seps;
            pos += 5;
        }
        pos = 0;
        while ((pos = text.find("TITLE=> ", pos)) != std::string::npos) {
            ++titles;
            pos += 8;
        }
        CHECK(seps == 2);
        CHECK(titles == 3);
    }
}

TEST_CASE("MTL round-trip recovers every field verbatim") {
    std::mt19937_64 rng(107);
    const std::vector<std::string> words = {"council", "voted",  "on",   "the",
                                            "measure", "Monday", "night", "5-4"};
    for (int iter = 0; iter < 50; ++iter) {
        auto sentence = [&](bool terminal) {
            std::string s;
            std::size_t len = 1 + rng() % 6;
            for (std::size_t i = 0; i < len; ++i) {
                if (!s.empty()) s += ' ';
                s += words[rng() % words.size()];
            }
            if (terminal && rng() % 2 == 0) s += '.';
            return s;
        };
        NewsTriplet t;
        t.issue_id = "rt-" + std::to_string(iter);
        t.left = {sentence(false), sentence(true)};
        t.center = {sentence(false), sentence(true)};
        t.right = {sentence(false), sentence(true)};
        t.neutral_title = sentence(false);
        t.neutral_article = sentence(true);

        SourceOrder order = shuffle_order(iter, t.issue_id);
        auto pairs = parse_mtl_input(format_mtl_input(t, order));
        REQUIRE(pairs.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            const SourceDoc& doc = source_for(t, order[i]);
            CHECK(pairs[i].first == doc.title);
            CHECK(pairs[i].second == doc.article);
        }
        auto target = parse_mtl_target(format_mtl_target(t));
        CHECK(target.first == t.neutral_title);
        CHECK(target.second == t.neutral_article);
    }
}

TEST_CASE("shuffle_order is deterministic and seed-sensitive") {
    CHECK(shuffle_order(7, "issue-1") == shuffle_order(7, "issue-1"));
    bool any_diff = false;
    for (int i = 0; i < 10; ++i) {
        std::string id = "issue-" + std::to_string(i);
        if (shuffle_order(1, id) != shuffle_order(2, id)) any_diff = true;
    }
    CHECK(any_diff);
}

TEST_CASE("shuffle_order is uniform over the six permutations") {
    std::map<std::string, std::size_t> counts;
    const std::size_t n = 6000;
    for (std::size_t i = 0; i < n; ++i) {
        std::string key;
        for (Leaning l : shuffle_order(1234, "uniform-" + std::to_string(i))) {
            key.push_back(leaning_letter(l));
        }
        counts[key]++;
    }
    REQUIRE(counts.size() == 6);
    std::vector<std::size_t> observed;
    for (const auto& [key, count] : counts) observed.push_back(count);
    // alpha = 0.01 critical value for 5 degrees of freedom
    CHECK(oracle::chi_square_uniform(observed, n) < 15.086272);
}
