#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace corvar {

struct ParsedToken {
  int index = 0;         // 1-based position in the sentence
  std::string form;      // NFC-normalized surface form
  int head = 0;          // 0 = virtual root, otherwise 1..n
  std::string relation;  // dependency label, e.g. "ATT", "VOB", "HED"

  bool operator==(const ParsedToken&) const = default;
};

struct ParsedSentence {
  std::vector<ParsedToken> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool operator==(const ParsedSentence&) const = default;
};

struct ParsedCorpus {
  std::string id;
  std::vector<ParsedSentence> sentences;

  bool operator==(const ParsedCorpus&) const = default;
};

// Enforces: indices contiguous 1..n, 0 <= head <= n, head != index, and
// exactly one root (head = 0). Throws errc::invalid_arc (errc::parse for
// index gaps). Head cycles are deliberately not rejected.
void validate_sentence(const ParsedSentence& sentence);

}  // namespace corvar
