#include "neus/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "neus/errors.hpp"
#include "neus/hashing.hpp"

namespace neus {

using nlohmann::json;

namespace {

constexpr std::string_view kMarkers[] = {"TITLE=>", "ARTICLE=>", "[SEP]"};

// Published AllSides counts: 2276 train+val out of 3564 crawled triplets,
// 1188 (one third) test.
constexpr double kPublishedTrainValFrac = 2276.0 / 3564.0;

void check_field(const std::string& value, const char* name, std::size_t lineno,
                 std::vector<std::string>* problems) {
    std::string trimmed = value;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
    if (trimmed.empty()) {
        problems->push_back("line " + std::to_string(lineno) + ": field '" + name +
                            "' is empty");
        return;
    }
    for (std::string_view marker : kMarkers) {
        if (value.find(marker) != std::string::npos) {
            problems->push_back("line " + std::to_string(lineno) + ": field '" + name +
                                "' contains reserved marker '" + std::string(marker) + "'");
        }
    }
}

bool valid_iso_date(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string require_string(const json& obj, const char* key, std::size_t lineno) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ValidationError("line " + std::to_string(lineno) + ": missing field '" + key +
                              "'");
    }
    if (!it->is_string()) {
        throw ValidationError("line " + std::to_string(lineno) + ": field '" + key +
                              "' must be a string");
    }
    return it->get<std::string>();
}

SourceDoc parse_source(const json& obj, const char* key, std::size_t lineno) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_object()) {
        throw ValidationError("line " + std::to_string(lineno) + ": missing field '" + key +
                              "'");
    }
    SourceDoc doc;
    doc.title = require_string(*it, "title", lineno);
    doc.article = require_string(*it, "article", lineno);
    return doc;
}

// floor(n * frac) with an epsilon so exact rationals (1/3 of 3) do not get
// truncated by the last ulp of the product.
std::size_t floor_frac(std::size_t n, double frac) {
    return static_cast<std::size_t>(static_cast<double>(n) * frac + 1e-9);
}

std::vector<NewsTriplet> shuffled(const std::vector<NewsTriplet>& triplets,
                                  std::uint64_t seed) {
    std::vector<std::size_t> order(triplets.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<NewsTriplet> out;
    out.reserve(triplets.size());
    for (std::size_t i : order) out.push_back(triplets[i]);
    return out;
}

}  // namespace

NewsTriplet triplet_from_json_line(const std::string& line, std::size_t lineno) {
    json obj;
    try {
        obj = json::parse(line);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), lineno);
    }
    if (!obj.is_object()) {
        throw ValidationError("line " + std::to_string(lineno) + ": expected a JSON object");
    }

    NewsTriplet t;
    t.issue_id = require_string(obj, "issue_id", lineno);
    t.left = parse_source(obj, "left", lineno);
    t.center = parse_source(obj, "center", lineno);
    t.right = parse_source(obj, "right", lineno);
    t.neutral_title = require_string(obj, "neutral_title", lineno);
    t.neutral_article = require_string(obj, "neutral_article", lineno);

    if (auto it = obj.find("date"); it != obj.end() && !it->is_null()) {
        std::string date = it->get<std::string>();
        if (!valid_iso_date(date)) {
            throw ValidationError("line " + std::to_string(lineno) +
                                  ": field 'date' is not an ISO-8601 date (YYYY-MM-DD)");
        }
        t.date = std::move(date);
    }
    if (auto it = obj.find("topics"); it != obj.end() && !it->is_null()) {
        t.topics = it->get<std::vector<std::string>>();
    }
    if (auto it = obj.find("media_names"); it != obj.end() && !it->is_null()) {
        auto names = it->get<std::vector<std::string>>();
        if (names.size() != 3) {
            throw ValidationError("line " + std::to_string(lineno) +
                                  ": field 'media_names' must list 3 outlets");
        }
        t.media_names = std::array<std::string, 3>{names[0], names[1], names[2]};
    }

    std::vector<std::string> problems;
    check_field(t.issue_id, "issue_id", lineno, &problems);
    check_field(t.left.title, "left.title", lineno, &problems);
    check_field(t.left.article, "left.article", lineno, &problems);
    check_field(t.center.title, "center.title", lineno, &problems);
    check_field(t.center.article, "center.article", lineno, &problems);
    check_field(t.right.title, "right.title", lineno, &problems);
    check_field(t.right.article, "right.article", lineno, &problems);
    check_field(t.neutral_title, "neutral_title", lineno, &problems);
    check_field(t.neutral_article, "neutral_article", lineno, &problems);
    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) {
            if (!msg.empty()) msg += "; ";
            msg += p;
        }
        throw ValidationError(msg);
    }
    return t;
}

std::vector<NewsTriplet> load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);

    std::vector<NewsTriplet> triplets;
    std::vector<std::string> problems;
    std::unordered_set<std::string> seen_ids;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            NewsTriplet t = triplet_from_json_line(line, lineno);
            if (!seen_ids.insert(t.issue_id).second) {
                problems.push_back("line " + std::to_string(lineno) +
                                   ": duplicate issue_id '" + t.issue_id + "'");
                continue;
            }
            triplets.push_back(std::move(t));
        } catch (const std::exception& e) {
            problems.push_back(e.what());
        }
    }
    if (in.bad()) throw IoError("error while reading corpus file: " + path);

    if (!problems.empty()) {
        std::string msg = "corpus validation failed (" + std::to_string(problems.size()) +
                          " issue(s)):";
        std::size_t shown = std::min<std::size_t>(problems.size(), 20);
        for (std::size_t i = 0; i < shown; ++i) msg += "\n  " + problems[i];
        if (shown < problems.size()) msg += "\n  ...";
        throw ValidationError(msg);
    }
    return triplets;
}

std::string triplet_to_json_line(const NewsTriplet& t) {
    json obj;
    obj["issue_id"] = t.issue_id;
    obj["left"] = {{"title", t.left.title}, {"article", t.left.article}};
    obj["center"] = {{"title", t.center.title}, {"article", t.center.article}};
    obj["right"] = {{"title", t.right.title}, {"article", t.right.article}};
    obj["neutral_title"] = t.neutral_title;
    obj["neutral_article"] = t.neutral_article;
    if (t.date) obj["date"] = *t.date;
    if (!t.topics.empty()) obj["topics"] = t.topics;
    if (t.media_names) {
        obj["media_names"] = std::vector<std::string>(t.media_names->begin(),
                                                      t.media_names->end());
    }
    return obj.dump();
}

void save_corpus(const std::vector<NewsTriplet>& triplets, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open corpus output file: " + path);
    for (const auto& t : triplets) out << triplet_to_json_line(t) << '\n';
    if (!out) throw IoError("error while writing corpus file: " + path);
}

DatasetSplit split_dataset(const std::vector<NewsTriplet>& triplets, double train_frac,
                           double val_frac, std::uint64_t seed) {
    if (train_frac <= 0.0 || val_frac <= 0.0 || train_frac + val_frac > 1.0) {
        throw ArgumentError("split_dataset: fractions must be positive with sum <= 1");
    }
    std::vector<NewsTriplet> pool = shuffled(triplets, seed);
    const auto n = pool.size();
    auto n_train = floor_frac(n, train_frac);
    auto n_val = floor_frac(n, val_frac);

    DatasetSplit split;
    split.train.assign(pool.begin(), pool.begin() + n_train);
    split.val.assign(pool.begin() + n_train, pool.begin() + n_train + n_val);
    split.test.assign(pool.begin() + n_train + n_val, pool.end());
    return split;
}

DatasetSplit split_dataset_published(const std::vector<NewsTriplet>& triplets,
                                     std::uint64_t seed) {
    std::vector<NewsTriplet> pool = shuffled(triplets, seed);
    const auto n = pool.size();
    auto n_test = n / 3;
    auto n_trainval = floor_frac(n, kPublishedTrainValFrac);
    auto n_train = floor_frac(n_trainval, 0.8);
    auto n_val = n_trainval - n_train;

    DatasetSplit split;
    auto it = pool.begin();
    split.train.assign(it, it + n_train);
    it += n_train;
    split.val.assign(it, it + n_val);
    it += n_val;
    split.test.assign(it, it + n_test);
    it += n_test;
    split.unassigned.assign(it, pool.end());
    return split;
}

const SourceDoc& source_for(const NewsTriplet& t, Leaning leaning) {
    switch (leaning) {
        case Leaning::Left: return t.left;
        case Leaning::Center: return t.center;
        default: return t.right;
    }
}

char leaning_letter(Leaning leaning) {
    switch (leaning) {
        case Leaning::Left: return 'L';
        case Leaning::Center: return 'C';
        default: return 'R';
    }
}

std::string format_mtl_input(const NewsTriplet& t, const SourceOrder& order) {
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const SourceDoc& doc = source_for(t, order[i]);
        if (i > 0) out += " [SEP] ";
        out += "TITLE=> ";
        out += doc.title;
        out += ". ARTICLE=> ";
        out += doc.article;
        out += ".";
    }
    return out;
}

std::string format_mtl_target(const NewsTriplet& t) {
    return "TITLE=> " + t.neutral_title + ". ARTICLE=> " + t.neutral_article;
}

SourceOrder shuffle_order(std::uint64_t seed, const std::string& issue_id) {
    static constexpr SourceOrder kPermutations[6] = {
        {Leaning::Left, Leaning::Center, Leaning::Right},
        {Leaning::Left, Leaning::Right, Leaning::Center},
        {Leaning::Center, Leaning::Left, Leaning::Right},
        {Leaning::Center, Leaning::Right, Leaning::Left},
        {Leaning::Right, Leaning::Left, Leaning::Center},
        {Leaning::Right, Leaning::Center, Leaning::Left},
    };
    std::uint64_t h = splitmix64(fnv1a64(issue_id) ^ splitmix64(seed));
    return kPermutations[h % 6];
}

}  // namespace neus
