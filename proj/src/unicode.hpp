#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 / Unicode support for tokenization: decoding, case folding,
// and character classification. Invalid byte sequences decode to U+FFFD so
// every input is handled without failure.

namespace neus::uni {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes the code point starting at `text[pos]` and advances `pos` past it.
// Malformed sequences consume one byte and yield U+FFFD.
char32_t decode(std::string_view text, std::size_t* pos);

void encode(char32_t cp, std::string* out);

std::vector<char32_t> decode_all(std::string_view text);

std::size_t count_codepoints(std::string_view text);

bool is_space(char32_t cp);

// True for general categories P* and S* (what tokenization strips at token
// boundaries).
bool is_punct_or_symbol(char32_t cp);

// Appends the full case folding of `cp` (1-3 code points) to `out`.
void fold_append(char32_t cp, std::u32string* out);

// Full Unicode case fold of a UTF-8 string.
std::string casefold(std::string_view text);

}  // namespace neus::uni
