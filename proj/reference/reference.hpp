#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corvar/corpus.hpp"
#include "corvar/parsed.hpp"

// Deliberately naive serial implementations, written along different routes
// than the production kernels so the two can check each other.
namespace corvar::ref {

// Scans every rank for an exact fixed point, then every polyline segment
// for a diagonal crossing solved as a line intersection.
double h_point_geometric(const FrequencyList& list);

// Plain left-to-right hypot sum.
double arc_length_serial(const FrequencyList& list);

// Re-walks every token of every sentence, one sentence at a time.
double corpus_mdd_naive(const ParsedCorpus& corpus);

// Ordered-map counting; ties already alphabetical before the stable sort
// by frequency.
FrequencyList frequency_list_map(const Corpus& corpus);

// Full enumeration of value permutations with ranks and the Pearson sums
// recomputed from scratch each time. Practical for n <= 7.
double exact_pvalue_full(const std::vector<double>& x,
                         const std::vector<double>& y);

// O(n^2) average ranks via count-less / count-equal.
std::vector<double> average_ranks_quadratic(const std::vector<double>& values);

std::uint64_t count_occurrences(const Corpus& corpus, const std::string& word);

}  // namespace corvar::ref
