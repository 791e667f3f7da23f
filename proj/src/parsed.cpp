#include "corvar/parsed.hpp"

#include "corvar/errors.hpp"

namespace corvar {

void validate_sentence(const ParsedSentence& sentence) {
  const int n = static_cast<int>(sentence.tokens.size());
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const ParsedToken& t = sentence.tokens[static_cast<std::size_t>(i)];
    if (t.index != i + 1)
      throw_error(errc::parse, "token indices not contiguous: expected " +
                                   std::to_string(i + 1) + ", got " +
                                   std::to_string(t.index));
    if (t.head < 0 || t.head > n)
      throw_error(errc::invalid_arc,
                  "head index " + std::to_string(t.head) +
                      " out of range for sentence of length " +
                      std::to_string(n));
    if (t.head == t.index)
      throw_error(errc::invalid_arc,
                  "token " + std::to_string(t.index) + " is its own head");
    if (t.head == 0) ++roots;
  }
  if (roots != 1)
    throw_error(errc::invalid_arc, "sentence has " + std::to_string(roots) +
                                       " root tokens, expected exactly 1");
}

}  // namespace corvar
