#include "neus/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "neus/errors.hpp"
#include "unicode.hpp"

namespace neus {

namespace {

bool parse_score(std::string_view field, double* out) {
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, *out);
    return ec == std::errc() && ptr == last;
}

bool has_whitespace(std::string_view term) {
    std::size_t pos = 0;
    while (pos < term.size()) {
        if (uni::is_space(uni::decode(term, &pos))) return true;
    }
    return false;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

}  // namespace

std::optional<VadEntry> VadLexicon::lookup(std::string_view token) const {
    if (token.empty()) return std::nullopt;
    auto it = entries_.find(uni::casefold(token));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

double VadLexicon::coverage(const std::vector<std::string>& tokens) const {
    if (tokens.empty()) return 0.0;
    std::size_t hits = 0;
    for (const auto& t : tokens) {
        if (entries_.count(t)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(tokens.size());
}

VadLexicon load_lexicon(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open lexicon file: " + path);

    std::unordered_map<std::string, VadEntry> entries;
    std::size_t duplicates = 0;
    std::size_t multiword = 0;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        auto fields = split_tabs(line);
        if (fields.size() < 4) {
            throw ParseError("lexicon row needs 4 tab-separated columns, got " +
                                 std::to_string(fields.size()),
                             lineno);
        }

        double v, a, d;
        bool numeric = parse_score(fields[1], &v) && parse_score(fields[2], &a) &&
                       parse_score(fields[3], &d);
        if (!numeric) {
            if (lineno == 1) continue;  // header row
            throw ParseError("non-numeric score in lexicon row", lineno);
        }
        if (v < 0.0 || v > 1.0 || a < 0.0 || a > 1.0 || d < 0.0 || d > 1.0) {
            throw ParseError("lexicon score outside [0,1]", lineno);
        }

        std::string term = uni::casefold(fields[0]);
        if (term.empty()) throw ParseError("empty term in lexicon row", lineno);
        if (has_whitespace(term)) {
            ++multiword;
            continue;
        }
        auto [it, inserted] = entries.insert_or_assign(term, VadEntry{term, v, a, d});
        if (!inserted) ++duplicates;
    }
    if (in.bad()) throw IoError("error while reading lexicon file: " + path);

    return VadLexicon(std::move(entries), path, duplicates, multiword);
}

void save_lexicon(const VadLexicon& lexicon, const std::string& path) {
    std::vector<const VadEntry*> rows;
    rows.reserve(lexicon.size());
    for (const auto& [term, entry] : lexicon.entries()) rows.push_back(&entry);
    std::sort(rows.begin(), rows.end(),
              [](const VadEntry* a, const VadEntry* b) { return a->term < b->term; });

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open lexicon output file: " + path);
    char buf[96];
    for (const VadEntry* e : rows) {
        out << e->term;
        for (double s : {e->valence, e->arousal, e->dominance}) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), s);
            out << '\t' << std::string_view(buf, ptr - buf);
        }
        out << '\n';
    }
    if (!out) throw IoError("error while writing lexicon file: " + path);
}

}  // namespace neus
