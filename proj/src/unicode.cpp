#include "unicode.hpp"

#include <algorithm>
#include <iterator>

namespace neus::uni {

namespace {
#include "unicode_tables.inc"
}  // namespace

char32_t decode(std::string_view text, std::size_t* pos) {
    const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
    std::size_t i = *pos;
    unsigned char b0 = bytes[i];

    std::size_t len;
    char32_t cp;
    if (b0 < 0x80) {
        *pos = i + 1;
        return b0;
    } else if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        *pos = i + 1;
        return kReplacement;
    }

    if (i + len > text.size()) {
        *pos = i + 1;
        return kReplacement;
    }
    for (std::size_t k = 1; k < len; ++k) {
        unsigned char b = bytes[i + k];
        if ((b & 0xC0) != 0x80) {
            *pos = i + 1;
            return kReplacement;
        }
        cp = (cp << 6) | (b & 0x3F);
    }

    // Reject overlong encodings, surrogates, and out-of-range values.
    static constexpr char32_t kMinForLen[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLen[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        *pos = i + 1;
        return kReplacement;
    }
    *pos = i + len;
    return cp;
}

void encode(char32_t cp, std::string* out) {
    if (cp < 0x80) {
        out->push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::vector<char32_t> decode_all(std::string_view text) {
    std::vector<char32_t> cps;
    cps.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        cps.push_back(decode(text, &pos));
    }
    return cps;
}

std::size_t count_codepoints(std::string_view text) {
    std::size_t n = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        decode(text, &pos);
        ++n;
    }
    return n;
}

bool is_space(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
        case 0x1C: case 0x1D: case 0x1E: case 0x1F:
        case 0x20: case 0x85: case 0xA0:
        case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F:
        case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_punct_or_symbol(char32_t cp) {
    auto it = std::upper_bound(std::begin(kPunctSymbolRanges), std::end(kPunctSymbolRanges), cp,
                               [](char32_t v, const CpRange& r) { return v < r.first; });
    if (it == std::begin(kPunctSymbolRanges)) return false;
    --it;
    return cp >= it->first && cp <= it->last;
}

void fold_append(char32_t cp, std::u32string* out) {
    auto it = std::lower_bound(std::begin(kCaseFoldTable), std::end(kCaseFoldTable), cp,
                               [](const FoldEntry& e, char32_t v) { return e.cp < v; });
    if (it != std::end(kCaseFoldTable) && it->cp == cp) {
        for (char32_t o : it->out) {
            if (o != 0) out->push_back(o);
        }
    } else {
        out->push_back(cp);
    }
}

std::string casefold(std::string_view text) {
    std::u32string folded;
    folded.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        fold_append(decode(text, &pos), &folded);
    }
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : folded) {
        encode(cp, &out);
    }
    return out;
}

}  // namespace neus::uni
