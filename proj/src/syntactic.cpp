#include "corvar/syntactic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <utility>

#include "corvar/errors.hpp"
#include "corvar/unicode.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace corvar {

namespace {

bool arc_included(const ParsedSentence& sentence, const ParsedToken& tok,
                  const SyntacticOptions& opts) {
  if (tok.head == 0) return false;  // root arc carries no distance
  if (!opts.include_punctuation_arcs && uni::all_punctuation(tok.form))
    return false;
  (void)sentence;
  return true;
}

struct SentenceArcs {
  double abs_sum = 0.0;
  std::uint64_t count = 0;
};

SentenceArcs accumulate_arcs(const ParsedSentence& sentence,
                             const SyntacticOptions& opts) {
  SentenceArcs acc;
  for (const auto& tok : sentence.tokens) {
    if (!arc_included(sentence, tok, opts)) continue;
    acc.abs_sum += std::abs(tok.head - tok.index);
    ++acc.count;
  }
  return acc;
}

}  // namespace

std::vector<ArcRecord> signed_distances(const ParsedSentence& sentence,
                                        std::size_t sentence_index,
                                        const SyntacticOptions& opts) {
  validate_sentence(sentence);
  std::vector<ArcRecord> out;
  out.reserve(sentence.tokens.size());
  for (const auto& tok : sentence.tokens) {
    if (!arc_included(sentence, tok, opts)) continue;
    out.push_back(ArcRecord{sentence_index, tok.index, tok.head, tok.relation,
                            tok.head - tok.index});
  }
  return out;
}

std::optional<double> sentence_mdd(const ParsedSentence& sentence,
                                   const SyntacticOptions& opts) {
  validate_sentence(sentence);
  const SentenceArcs acc = accumulate_arcs(sentence, opts);
  if (acc.count == 0) return std::nullopt;
  return acc.abs_sum / static_cast<double>(acc.count);
}

MddSummary corpus_mdd_summary(const ParsedCorpus& corpus,
                              const SyntacticOptions& opts) {
  const std::size_t n = corpus.sentences.size();
  for (const auto& s : corpus.sentences) validate_sentence(s);

  // Slot-per-sentence results reduced serially in sentence order, so the
  // totals do not depend on the thread count.
  std::vector<SentenceArcs> slots(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n >= 256)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    slots[static_cast<std::size_t>(i)] =
        accumulate_arcs(corpus.sentences[static_cast<std::size_t>(i)], opts);
  }

  MddSummary summary;
  summary.sentence_count = n;
  double macro_sum = 0.0;
  double micro_sum = 0.0;
  for (const auto& slot : slots) {
    if (slot.count == 0) continue;
    ++summary.measured_sentence_count;
    summary.arc_count += slot.count;
    macro_sum += slot.abs_sum / static_cast<double>(slot.count);
    micro_sum += slot.abs_sum;
  }
  if (summary.measured_sentence_count == 0)
    throw_error(errc::undefined_metric,
                "corpus MDD undefined: no sentence has a measurable arc");
  summary.macro_mdd =
      macro_sum / static_cast<double>(summary.measured_sentence_count);
  summary.micro_mdd = micro_sum / static_cast<double>(summary.arc_count);
  return summary;
}

double corpus_mdd(const ParsedCorpus& corpus, const SyntacticOptions& opts) {
  return corpus_mdd_summary(corpus, opts).macro_mdd;
}

std::vector<RelationStat> relation_stats(const ParsedCorpus& corpus,
                                         const SyntacticOptions& opts) {
  for (const auto& s : corpus.sentences) validate_sentence(s);

  struct Tally {
    std::uint64_t count = 0;
    std::int64_t signed_sum = 0;  // DDs are small integers; exact in int64
  };
  std::map<std::string, Tally> totals;

  const std::size_t n = corpus.sentences.size();
#ifdef _OPENMP
  if (n >= 256) {
    std::vector<std::map<std::string, Tally>> partial;
#pragma omp parallel
    {
#pragma omp single
      partial.resize(static_cast<std::size_t>(omp_get_num_threads()));
      auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const auto& sentence = corpus.sentences[static_cast<std::size_t>(i)];
        for (const auto& tok : sentence.tokens) {
          if (!arc_included(sentence, tok, opts)) continue;
          auto& t = mine[tok.relation];
          ++t.count;
          t.signed_sum += tok.head - tok.index;
        }
      }
    }
    // Integer merges commute, so the combined totals are exact and
    // independent of the thread count.
    for (const auto& part : partial)
      for (const auto& [label, t] : part) {
        auto& dst = totals[label];
        dst.count += t.count;
        dst.signed_sum += t.signed_sum;
      }
  } else
#endif
  {
    for (const auto& sentence : corpus.sentences)
      for (const auto& tok : sentence.tokens) {
        if (!arc_included(sentence, tok, opts)) continue;
        auto& t = totals[tok.relation];
        ++t.count;
        t.signed_sum += tok.head - tok.index;
      }
  }

  std::uint64_t arc_total = 0;
  for (const auto& [label, t] : totals) arc_total += t.count;
  if (arc_total == 0)
    throw_error(errc::undefined_metric,
                "relation statistics undefined: corpus has no arcs");

  std::vector<RelationStat> stats;
  stats.reserve(totals.size());
  for (const auto& [label, t] : totals)
    stats.push_back(RelationStat{
        label, static_cast<double>(t.count) / static_cast<double>(arc_total),
        static_cast<double>(t.signed_sum) / static_cast<double>(t.count)});
  std::sort(stats.begin(), stats.end(),
            [](const RelationStat& a, const RelationStat& b) {
              if (a.proportion != b.proportion)
                return a.proportion > b.proportion;
              return a.label < b.label;  // UTF-8 bytes sort in code-point order
            });
  return stats;
}

std::vector<ExtremeSentence> extreme_sentences(const ParsedCorpus& corpus,
                                               std::size_t k,
                                               const SyntacticOptions& opts) {
  std::vector<ExtremeSentence> measured;
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    if (auto mdd = sentence_mdd(corpus.sentences[i], opts))
      measured.push_back(ExtremeSentence{i, *mdd});
  }
  std::stable_sort(measured.begin(), measured.end(),
                   [](const ExtremeSentence& a, const ExtremeSentence& b) {
                     return a.mdd > b.mdd;
                   });
  if (measured.size() > k) measured.resize(k);
  return measured;
}

SyntacticProfile syntactic_profile(const ParsedCorpus& corpus,
                                   const SyntacticOptions& opts) {
  const MddSummary summary = corpus_mdd_summary(corpus, opts);
  SyntacticProfile profile;
  profile.id = corpus.id;
  profile.sentence_count = summary.sentence_count;
  profile.arc_count = summary.arc_count;
  profile.mean_mdd = summary.macro_mdd;
  profile.relations = relation_stats(corpus, opts);
  return profile;
}

}  // namespace corvar
