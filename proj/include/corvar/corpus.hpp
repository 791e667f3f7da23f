#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace corvar {

// A single segmented word. The text is NFC-normalized at construction and is
// guaranteed non-empty and free of whitespace code points.
class Token {
 public:
  // Normalizes and validates `raw`. Throws errc::encoding on malformed UTF-8
  // and errc::parse when the text is empty or contains whitespace.
  static Token make(std::string_view raw);

  const std::string& text() const noexcept { return text_; }

  bool operator==(const Token&) const = default;
  auto operator<=>(const Token&) const = default;

 private:
  explicit Token(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

// Unicode scalar values in the token's (already NFC) text.
std::size_t char_count(const Token& token);

struct Sentence {
  std::vector<Token> tokens;  // non-empty

  bool operator==(const Sentence&) const = default;
};

struct Corpus {
  std::string id;
  std::vector<Sentence> sentences;

  std::uint64_t token_count() const noexcept;
  bool operator==(const Corpus&) const = default;
};

struct FrequencyEntry {
  std::string type_text;
  std::uint64_t frequency = 0;

  bool operator==(const FrequencyEntry&) const = default;
};

// Rank-ordered type/frequency table: frequencies non-increasing, ties broken
// by ascending code-point order of the type string. Rank r is the 1-based
// position in `entries`.
struct FrequencyList {
  std::vector<FrequencyEntry> entries;
  std::uint64_t token_total = 0;  // = Σ frequency = corpus token count

  std::size_t type_count() const noexcept { return entries.size(); }
  std::uint64_t frequency_at(std::size_t rank) const {  // rank is 1-based
    return entries[rank - 1].frequency;
  }
  bool operator==(const FrequencyList&) const = default;
};

// Counts exact-string type occurrences over the whole corpus.
// Throws errc::empty_corpus when the corpus has no tokens.
FrequencyList build_frequency_list(const Corpus& corpus);

// Copy of `corpus` with all-punctuation tokens dropped; sentences that become
// empty are removed entirely.
Corpus filter_punctuation_tokens(const Corpus& corpus);

}  // namespace corvar
