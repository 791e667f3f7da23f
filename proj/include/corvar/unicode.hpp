#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace corvar::uni {

// True if `s` is well-formed UTF-8 (no overlongs, surrogates, or > U+10FFFF).
bool valid_utf8(std::string_view s);

// Decodes well-formed UTF-8 into scalar values. Throws errc::encoding otherwise.
std::vector<char32_t> decode(std::string_view s);

// Number of Unicode scalar values. Throws errc::encoding on malformed input.
std::size_t scalar_count(std::string_view s);

// Canonical composition (NFC). Throws errc::encoding on malformed input.
std::string nfc(std::string_view s);

bool is_whitespace(char32_t cp);
bool is_han(char32_t cp);

// Any scalar with the Unicode White_Space property.
bool contains_whitespace(std::string_view s);

// Exactly one scalar, and that scalar is script=Han.
bool is_single_han(std::string_view s);

// Every scalar is punctuation (general category P*). False for empty input.
bool all_punctuation(std::string_view s);

}  // namespace corvar::uni
