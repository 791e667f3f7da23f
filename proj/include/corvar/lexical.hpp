#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corvar/corpus.hpp"

namespace corvar {

// One corpus's full vocabulary-measurement record. arc_length_to_h and
// r_value are absent when undefined (fewer than two types, or a degenerate
// list whose h-point falls beyond the last rank).
struct LexicalProfile {
  std::string id;
  std::uint64_t token_count = 0;
  std::uint64_t type_count = 0;
  double ttr = 0.0;
  std::uint64_t hapax_count = 0;
  double hapax_proportion = 0.0;
  std::uint64_t monosyllabic_type_count = 0;
  double monosyllabic_proportion = 0.0;
  double h_point = 0.0;
  double arc_length_total = 0.0;
  std::optional<double> arc_length_to_h;
  std::optional<double> r_value;
  double a_value = 0.0;

  bool operator==(const LexicalProfile&) const = default;
};

// V / N. Throws errc::empty_corpus when N = 0.
double ttr(const Corpus& corpus);

struct HapaxStats {
  std::uint64_t count = 0;
  double proportion = 0.0;                // count / V
  std::vector<std::string> types;         // in rank order
};
HapaxStats hapax_stats(const FrequencyList& list);

struct MonosyllabicStats {
  std::uint64_t count = 0;
  double proportion = 0.0;  // count / V
};
// Types whose text is a single scalar value; with han_only the scalar must
// additionally be script=Han.
MonosyllabicStats monosyllabic_stats(const FrequencyList& list,
                                     bool han_only = true);

// The rank where the rank-frequency polyline crosses y = x. Exact when some
// rank r has f(r) = r; otherwise linear interpolation between the bracketing
// ranks. Lists whose every frequency exceeds its rank are extended with a
// virtual endpoint (V+1, 0) so the crossing always exists.
double h_point(const FrequencyList& list);

// L: polyline arc length over the whole list, Σ sqrt((f(r)-f(r+1))^2 + 1).
double arc_length_total(const FrequencyList& list);

// L_h: polyline arc length from rank 1 to the point (h, h).
// Throws errc::undefined_metric when V < 2.
double arc_length_to_h(const FrequencyList& list, double h);

// R = 1 - L_h / L at h = h_point(list). Throws errc::undefined_metric when
// V < 2, L = 0, or the h-point lies beyond rank V (L_h would overshoot L).
double r_value(const FrequencyList& list);

// a = N / h^2.
double a_value(std::uint64_t token_count, double h);

// Computes the whole profile; metrics that are undefined for the input are
// left absent rather than fabricated.
LexicalProfile lexical_profile(const Corpus& corpus, bool han_only = true);

}  // namespace corvar
