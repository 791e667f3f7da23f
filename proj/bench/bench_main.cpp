#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "corvar/corpus.hpp"
#include "corvar/ingest.hpp"
#include "corvar/lexical.hpp"
#include "corvar/parsed.hpp"
#include "corvar/rank_stats.hpp"
#include "corvar/syntactic.hpp"
#include "reference.hpp"

namespace {

using namespace corvar;

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

template <typename F>
double time_call(F&& f) {
  const double start = now_seconds();
  f();
  return now_seconds() - start;
}

void report(const char* name, double serial_s, double parallel_s, bool match) {
  std::printf("%-28s serial %8.1f ms   parallel %8.1f ms   speedup %5.2fx   %s\n",
              name, serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
              match ? "results match" : "RESULTS DIFFER");
}

Corpus synthetic_corpus(std::size_t sentences, std::size_t sentence_len,
                        std::size_t vocabulary, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Corpus corpus;
  corpus.id = "bench";
  corpus.sentences.reserve(sentences);
  const double log_v = std::log(static_cast<double>(vocabulary));
  for (std::size_t s = 0; s < sentences; ++s) {
    Sentence sentence;
    sentence.tokens.reserve(sentence_len);
    for (std::size_t t = 0; t < sentence_len; ++t) {
      // log-uniform ranks give a heavy-tailed frequency profile
      const double u =
          static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
      const auto rank = static_cast<std::size_t>(std::exp(u * log_v));
      sentence.tokens.push_back(Token::make("w" + std::to_string(rank)));
    }
    corpus.sentences.push_back(std::move(sentence));
  }
  return corpus;
}

ParsedCorpus synthetic_treebank(std::size_t sentences, std::size_t sentence_len,
                                std::uint64_t seed) {
  SplitMix64 rng(seed);
  ParsedCorpus corpus;
  corpus.id = "bench";
  corpus.sentences.reserve(sentences);
  for (std::size_t s = 0; s < sentences; ++s) {
    ParsedSentence sentence;
    sentence.tokens.reserve(sentence_len);
    for (std::size_t t = 1; t <= sentence_len; ++t) {
      ParsedToken tok;
      tok.index = static_cast<int>(t);
      tok.form = "t" + std::to_string(t);
      // heads point at earlier tokens, so the result is always a tree
      tok.head = t == 1 ? 0 : static_cast<int>(rng.next() % (t - 1) + 1);
      tok.relation = "R" + std::to_string(rng.next() % 12);
      sentence.tokens.push_back(std::move(tok));
    }
    corpus.sentences.push_back(std::move(sentence));
  }
  return corpus;
}

FrequencyList synthetic_frequencies(std::size_t types, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::uint64_t> freqs(types);
  std::uint64_t f = 1;
  for (std::size_t i = types; i-- > 0;) {
    freqs[i] = f;
    f += rng.next() % 3;
  }
  FrequencyList list;
  list.entries.reserve(types);
  for (std::size_t i = 0; i < types; ++i) {
    list.entries.push_back(FrequencyEntry{"w" + std::to_string(i), freqs[i]});
    list.token_total += freqs[i];
  }
  return list;
}

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({std::abs(a), std::abs(b), 1.0});
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n\n");
#endif

  {
    const Corpus corpus = synthetic_corpus(100000, 20, 50000, 7);
    FrequencyList serial, parallel;
    const double ts = time_call([&] { serial = ref::frequency_list_map(corpus); });
    const double tp = time_call([&] { parallel = build_frequency_list(corpus); });
    report("frequency list (2M tokens)", ts, tp,
           serial.entries == parallel.entries &&
               serial.token_total == parallel.token_total);
  }

  {
    const ParsedCorpus corpus = synthetic_treebank(200000, 15, 11);
    double serial = 0, parallel = 0;
    const double ts = time_call([&] { serial = ref::corpus_mdd_naive(corpus); });
    const double tp = time_call([&] { parallel = corpus_mdd(corpus); });
    report("corpus MDD (200k sentences)", ts, tp, close(serial, parallel));
  }

  {
    const FrequencyList list = synthetic_frequencies(1000000, 13);
    double serial = 0, parallel = 0;
    const double ts = time_call([&] { serial = ref::arc_length_serial(list); });
    const double tp = time_call([&] { parallel = arc_length_total(list); });
    report("arc length (1M ranks)", ts, tp, close(serial, parallel));
  }

  {
    SplitMix64 rng(17);
    std::vector<double> x(10), y(10);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = static_cast<double>(rng.next() % 1000);
      y[i] = static_cast<double>(rng.next() % 1000);
    }
    double serial = 0, parallel = 0;
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
    omp_set_num_threads(1);
    const double ts = time_call([&] { serial = exact_permutation_pvalue(x, y); });
    omp_set_num_threads(threads);
#else
    const double ts = time_call([&] { serial = exact_permutation_pvalue(x, y); });
#endif
    const double tp = time_call([&] { parallel = exact_permutation_pvalue(x, y); });
    report("exact permutation p (n=10)", ts, tp, serial == parallel);
  }

  return 0;
}
