#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corvar/parsed.hpp"

namespace corvar {

struct ArcRecord {
  std::size_t sentence_index = 0;  // 0-based position in the corpus
  int dependent_index = 0;         // 1-based
  int head_index = 0;              // 1-based (root arcs are never recorded)
  std::string relation;
  int signed_distance = 0;  // head_index - dependent_index, never 0
};

struct SyntacticOptions {
  // When false, arcs whose dependent form is all-punctuation are dropped
  // from distances and relation statistics.
  bool include_punctuation_arcs = true;
};

// One record per non-root token; the root arc is excluded.
std::vector<ArcRecord> signed_distances(const ParsedSentence& sentence,
                                        std::size_t sentence_index = 0,
                                        const SyntacticOptions& opts = {});

// Mean |DD| over the sentence's non-root arcs; nullopt when the sentence has
// no measurable arc (single-token sentences).
std::optional<double> sentence_mdd(const ParsedSentence& sentence,
                                   const SyntacticOptions& opts = {});

struct MddSummary {
  double macro_mdd = 0.0;  // mean of per-sentence MDDs (the headline figure)
  double micro_mdd = 0.0;  // pooled mean over all arcs, for comparison
  std::uint64_t sentence_count = 0;
  std::uint64_t measured_sentence_count = 0;
  std::uint64_t arc_count = 0;
};

// Throws errc::undefined_metric when no sentence has a defined MDD.
MddSummary corpus_mdd_summary(const ParsedCorpus& corpus,
                              const SyntacticOptions& opts = {});
double corpus_mdd(const ParsedCorpus& corpus,
                  const SyntacticOptions& opts = {});

struct RelationStat {
  std::string label;
  double proportion = 0.0;            // arcs with this label / all arcs
  double mean_signed_distance = 0.0;  // mean DD (signed) for this label

  bool operator==(const RelationStat&) const = default;
};

// Sorted by proportion descending, ties by label code-point order.
// Throws errc::undefined_metric when the corpus has no arcs.
std::vector<RelationStat> relation_stats(const ParsedCorpus& corpus,
                                         const SyntacticOptions& opts = {});

struct ExtremeSentence {
  std::size_t sentence_index = 0;
  double mdd = 0.0;
};

// Up to k measured sentences with the highest MDD, descending; MDD ties
// resolved toward the earlier sentence.
std::vector<ExtremeSentence> extreme_sentences(const ParsedCorpus& corpus,
                                               std::size_t k,
                                               const SyntacticOptions& opts = {});

struct SyntacticProfile {
  std::string id;
  std::uint64_t sentence_count = 0;
  std::uint64_t arc_count = 0;
  double mean_mdd = 0.0;
  std::vector<RelationStat> relations;  // all labels; proportions sum to 1

  bool operator==(const SyntacticProfile&) const = default;
};

SyntacticProfile syntactic_profile(const ParsedCorpus& corpus,
                                   const SyntacticOptions& opts = {});

}  // namespace corvar
