#include "neus/textproc.hpp"

#include <array>
#include <string_view>
#include <unordered_set>

#include "neus/errors.hpp"
#include "unicode.hpp"

namespace neus {

namespace {

const std::unordered_set<std::string_view>& abbreviations() {
    static const std::unordered_set<std::string_view> kAbbrev = {
        "U.S.", "U.N.", "U.K.", "Mr.", "Mrs.", "Ms.", "Dr.",  "Jr.",
        "Sr.",  "Sen.", "Rep.", "Gov.", "Prof.", "St.", "Gen.", "vs.",
    };
    return kAbbrev;
}

// A single capital letter followed by '.': middle initials never end a
// sentence.
bool is_initial(std::string_view word) {
    return word.size() == 2 && word[1] == '.' && word[0] >= 'A' && word[0] <= 'Z';
}

}  // namespace

TokenSequence tokenize(std::string_view text) {
    TokenSequence seq;
    std::vector<char32_t> piece;

    auto flush = [&] {
        if (piece.empty()) return;
        std::size_t begin = 0;
        std::size_t end = piece.size();
        while (begin < end && uni::is_punct_or_symbol(piece[begin])) ++begin;
        while (end > begin && uni::is_punct_or_symbol(piece[end - 1])) --end;
        if (begin < end) {
            std::u32string folded;
            for (std::size_t i = begin; i < end; ++i) {
                uni::fold_append(piece[i], &folded);
            }
            std::string token;
            for (char32_t cp : folded) uni::encode(cp, &token);
            seq.tokens.push_back(std::move(token));
        }
        piece.clear();
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        char32_t cp = uni::decode(text, &pos);
        ++seq.source_len_chars;
        if (uni::is_space(cp)) {
            flush();
        } else {
            piece.push_back(cp);
        }
    }
    flush();
    return seq;
}

SentenceList split_sentences(std::string_view text) {
    SentenceList out;
    std::string current;
    std::size_t word_start = std::string::npos;  // index into `current`

    auto emit = [&] {
        std::size_t b = 0, e = current.size();
        while (b < e && static_cast<unsigned char>(current[b]) <= ' ') ++b;
        while (e > b && static_cast<unsigned char>(current[e - 1]) <= ' ') --e;
        if (e > b) out.sentences.push_back(current.substr(b, e - b));
        current.clear();
        word_start = std::string::npos;
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t cp_start = pos;
        char32_t cp = uni::decode(text, &pos);
        bool space = uni::is_space(cp);

        if (!space && word_start == std::string::npos) {
            word_start = current.size();
        }
        current.append(text.substr(cp_start, pos - cp_start));

        if (cp == '!' || cp == '?' || cp == '.') {
            std::size_t peek = pos;
            bool at_boundary = peek >= text.size();
            if (!at_boundary) {
                char32_t next = uni::decode(text, &peek);
                at_boundary = uni::is_space(next);
            }
            if (at_boundary) {
                if (cp == '.') {
                    std::string_view word(current.data() + (word_start == std::string::npos ? current.size() : word_start),
                                          current.size() - (word_start == std::string::npos ? current.size() : word_start));
                    if (abbreviations().count(word) || is_initial(word)) {
                        continue;
                    }
                }
                emit();
            }
        } else if (space) {
            word_start = std::string::npos;
        }
    }
    emit();
    return out;
}

NgramCounts ngram_counts(const std::vector<std::string>& tokens, int n) {
    if (n < 1) throw ArgumentError("ngram order must be >= 1");
    NgramCounts counts;
    if (tokens.size() < static_cast<std::size_t>(n)) return counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        std::string key = tokens[i];
        for (int k = 1; k < n; ++k) {
            key.push_back('\x1f');
            key += tokens[i + k];
        }
        ++counts[key];
    }
    return counts;
}

}  // namespace neus
