#include "corvar/corpus.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "corvar/errors.hpp"
#include "corvar/unicode.hpp"

namespace corvar {

Token Token::make(std::string_view raw) {
  std::string text = uni::nfc(raw);
  if (text.empty()) throw_error(errc::parse, "empty token");
  if (uni::contains_whitespace(text))
    throw_error(errc::parse, "token contains whitespace: \"" + text + "\"");
  return Token(std::move(text));
}

std::size_t char_count(const Token& token) {
  return uni::scalar_count(token.text());
}

std::uint64_t Corpus::token_count() const noexcept {
  std::uint64_t n = 0;
  for (const Sentence& s : sentences) n += s.tokens.size();
  return n;
}

namespace {

using CountMap = std::unordered_map<std::string, std::uint64_t>;

void count_range(const Corpus& corpus, std::size_t begin, std::size_t end,
                 CountMap& counts) {
  for (std::size_t si = begin; si < end; ++si)
    for (const Token& t : corpus.sentences[si].tokens) ++counts[t.text()];
}

CountMap count_types(const Corpus& corpus) {
  const std::size_t n = corpus.sentences.size();
  CountMap total;
#ifdef _OPENMP
  if (n >= 512) {
    // Per-thread maps merged with integer adds, so the result is identical
    // for any thread count.
    std::vector<CountMap> partial;
#pragma omp parallel
    {
#pragma omp single
      partial.resize(static_cast<std::size_t>(omp_get_num_threads()));
      CountMap& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (long si = 0; si < static_cast<long>(n); ++si)
        for (const Token& t :
             corpus.sentences[static_cast<std::size_t>(si)].tokens)
          ++local[t.text()];
    }
    for (CountMap& local : partial) {
      if (total.empty()) {
        total = std::move(local);
        continue;
      }
      for (auto& [text, count] : local) total[text] += count;
    }
    return total;
  }
#endif
  count_range(corpus, 0, n, total);
  return total;
}

}  // namespace

FrequencyList build_frequency_list(const Corpus& corpus) {
  if (corpus.token_count() == 0)
    throw_error(errc::empty_corpus,
                "cannot build a frequency list from an empty corpus");

  CountMap counts = count_types(corpus);

  FrequencyList list;
  list.entries.reserve(counts.size());
  for (auto& [text, count] : counts)
    list.entries.push_back(FrequencyEntry{text, count});
  // Rank order: frequency descending, then code-point order of the type text
  // (bytewise comparison of UTF-8 preserves code-point order).
  std::sort(list.entries.begin(), list.entries.end(),
            [](const FrequencyEntry& a, const FrequencyEntry& b) {
              if (a.frequency != b.frequency) return a.frequency > b.frequency;
              return a.type_text < b.type_text;
            });
  list.token_total = corpus.token_count();
  return list;
}

Corpus filter_punctuation_tokens(const Corpus& corpus) {
  Corpus out;
  out.id = corpus.id;
  out.sentences.reserve(corpus.sentences.size());
  for (const Sentence& s : corpus.sentences) {
    Sentence kept;
    for (const Token& t : s.tokens)
      if (!uni::all_punctuation(t.text())) kept.tokens.push_back(t);
    if (!kept.tokens.empty()) out.sentences.push_back(std::move(kept));
  }
  return out;
}

}  // namespace corvar
