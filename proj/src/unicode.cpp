#include "corvar/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/uscript.h>

#include "corvar/errors.hpp"

namespace corvar::uni {

namespace {

// Decodes one scalar starting at s[i]; advances i past it. Returns false on
// malformed input. Rejects overlong forms, surrogates, and values > U+10FFFF.
bool next_scalar(std::string_view s, std::size_t& i, char32_t& out) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    out = b0;
    i += 1;
    return true;
  }
  auto cont = [&](std::size_t k) {
    return i + k < s.size() &&
           (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  auto tail = [&](std::size_t k) {
    return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
  };
  if ((b0 & 0xE0) == 0xC0) {
    if (!cont(1)) return false;
    out = (static_cast<char32_t>(b0 & 0x1F) << 6) | tail(1);
    if (out < 0x80) return false;
    i += 2;
    return true;
  }
  if ((b0 & 0xF0) == 0xE0) {
    if (!cont(1) || !cont(2)) return false;
    out = (static_cast<char32_t>(b0 & 0x0F) << 12) | (tail(1) << 6) | tail(2);
    if (out < 0x800 || (out >= 0xD800 && out <= 0xDFFF)) return false;
    i += 3;
    return true;
  }
  if ((b0 & 0xF8) == 0xF0) {
    if (!cont(1) || !cont(2) || !cont(3)) return false;
    out = (static_cast<char32_t>(b0 & 0x07) << 18) | (tail(1) << 12) |
          (tail(2) << 6) | tail(3);
    if (out < 0x10000 || out > 0x10FFFF) return false;
    i += 4;
    return true;
  }
  return false;
}

const icu::Normalizer2& nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* inst = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || inst == nullptr)
    throw_error(errc::encoding, "ICU NFC normalizer unavailable");
  return *inst;
}

}  // namespace

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  char32_t cp;
  while (i < s.size())
    if (!next_scalar(s, i, cp)) return false;
  return true;
}

std::vector<char32_t> decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  char32_t cp;
  while (i < s.size()) {
    if (!next_scalar(s, i, cp))
      throw_error(errc::encoding, "malformed UTF-8 at byte offset " +
                                      std::to_string(i));
    out.push_back(cp);
  }
  return out;
}

std::size_t scalar_count(std::string_view s) {
  std::size_t i = 0, n = 0;
  char32_t cp;
  while (i < s.size()) {
    if (!next_scalar(s, i, cp))
      throw_error(errc::encoding, "malformed UTF-8 at byte offset " +
                                      std::to_string(i));
    ++n;
  }
  return n;
}

std::string nfc(std::string_view s) {
  if (!valid_utf8(s)) throw_error(errc::encoding, "malformed UTF-8 input");
  // Unnormalized input is rare in segmenter output; skip the round-trip when
  // ICU can tell the string is already NFC.
  const icu::Normalizer2& norm = nfc_instance();
  icu::UnicodeString u16 =
      icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), s.size()));
  UErrorCode status = U_ZERO_ERROR;
  if (norm.isNormalized(u16, status) && U_SUCCESS(status))
    return std::string(s);
  status = U_ZERO_ERROR;
  icu::UnicodeString composed = norm.normalize(u16, status);
  if (U_FAILURE(status)) throw_error(errc::encoding, "NFC normalization failed");
  std::string out;
  composed.toUTF8String(out);
  return out;
}

bool is_whitespace(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0;
}

bool is_han(char32_t cp) {
  UErrorCode status = U_ZERO_ERROR;
  UScriptCode script = uscript_getScript(static_cast<UChar32>(cp), &status);
  return U_SUCCESS(status) && script == USCRIPT_HAN;
}

bool contains_whitespace(std::string_view s) {
  for (char32_t cp : decode(s))
    if (is_whitespace(cp)) return true;
  return false;
}

bool is_single_han(std::string_view s) {
  std::size_t i = 0;
  char32_t cp;
  if (s.empty() || !next_scalar(s, i, cp)) return false;
  return i == s.size() && is_han(cp);
}

bool all_punctuation(std::string_view s) {
  if (s.empty()) return false;
  for (char32_t cp : decode(s))
    if (u_ispunct(static_cast<UChar32>(cp)) == 0) return false;
  return true;
}

}  // namespace corvar::uni
