#include "corvar/lexical.hpp"

#include <algorithm>
#include <cmath>

#include "corvar/errors.hpp"
#include "corvar/unicode.hpp"

namespace corvar {

namespace {

double segment_length(double f_r, double f_next) {
  const double df = f_r - f_next;
  return std::sqrt(df * df + 1.0);
}

// Deterministic blocked sum: fixed block size, partial sums combined in block
// order, so the value does not depend on the thread count.
double arc_length_blocked(const FrequencyList& list) {
  const std::size_t v = list.type_count();
  if (v < 2) return 0.0;
  const std::size_t segments = v - 1;
  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (segments + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (long b = 0; b < static_cast<long>(blocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(lo + kBlock, segments);
    double sum = 0.0;
    for (std::size_t r = lo; r < hi; ++r)
      sum += segment_length(
          static_cast<double>(list.entries[r].frequency),
          static_cast<double>(list.entries[r + 1].frequency));
    partial[static_cast<std::size_t>(b)] = sum;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace

double ttr(const Corpus& corpus) {
  const FrequencyList list = build_frequency_list(corpus);
  return static_cast<double>(list.type_count()) /
         static_cast<double>(list.token_total);
}

HapaxStats hapax_stats(const FrequencyList& list) {
  HapaxStats stats;
  for (const FrequencyEntry& e : list.entries)
    if (e.frequency == 1) {
      ++stats.count;
      stats.types.push_back(e.type_text);
    }
  stats.proportion = static_cast<double>(stats.count) /
                     static_cast<double>(list.type_count());
  return stats;
}

MonosyllabicStats monosyllabic_stats(const FrequencyList& list,
                                     bool han_only) {
  MonosyllabicStats stats;
  for (const FrequencyEntry& e : list.entries) {
    if (han_only) {
      if (uni::is_single_han(e.type_text)) ++stats.count;
    } else if (uni::scalar_count(e.type_text) == 1) {
      ++stats.count;
    }
  }
  stats.proportion = static_cast<double>(stats.count) /
                     static_cast<double>(list.type_count());
  return stats;
}

double h_point(const FrequencyList& list) {
  const std::size_t v = list.type_count();
  if (v == 0) throw_error(errc::undefined_metric, "h-point of an empty list");
  // f(r) - r is strictly decreasing, so there is at most one fixed point and
  // the first rank with f(r) <= r brackets the crossing.
  for (std::size_t r = 1; r <= v; ++r) {
    const auto f_r = list.frequency_at(r);
    if (f_r == r) return static_cast<double>(r);
    if (f_r < r) {
      const double i = static_cast<double>(r - 1);
      const double j = static_cast<double>(r);
      const double f_i = static_cast<double>(list.frequency_at(r - 1));
      const double f_j = static_cast<double>(f_r);
      return (f_i * j - f_j * i) / (j - i + f_i - f_j);
    }
  }
  // f(r) > r everywhere: intersect the segment to the virtual point (V+1, 0).
  const double i = static_cast<double>(v);
  const double j = static_cast<double>(v + 1);
  const double f_i = static_cast<double>(list.frequency_at(v));
  return (f_i * j) / (j - i + f_i);
}

double arc_length_total(const FrequencyList& list) {
  if (list.type_count() == 0)
    throw_error(errc::undefined_metric, "arc length of an empty list");
  return arc_length_blocked(list);
}

double arc_length_to_h(const FrequencyList& list, double h) {
  const std::size_t v = list.type_count();
  if (v < 2)
    throw_error(errc::undefined_metric,
                "arc length to h requires at least two types");
  const auto floor_h = static_cast<std::size_t>(std::floor(h));
  double sum = 0.0;
  for (std::size_t r = 1; r + 1 <= floor_h; ++r)
    sum += segment_length(static_cast<double>(list.frequency_at(r)),
                          static_cast<double>(list.frequency_at(r + 1)));
  const double f_floor =
      static_cast<double>(list.frequency_at(std::min(floor_h, v)));
  const double dx = h - static_cast<double>(floor_h);
  const double dy = h - f_floor;
  sum += std::sqrt(dy * dy + dx * dx);
  return sum;
}

double r_value(const FrequencyList& list) {
  const std::size_t v = list.type_count();
  if (v < 2)
    throw_error(errc::undefined_metric, "R requires at least two types");
  const double h = h_point(list);
  if (h > static_cast<double>(v))
    throw_error(errc::undefined_metric,
                "R undefined: h-point lies beyond the last rank");
  const double total = arc_length_total(list);
  if (total == 0.0)
    throw_error(errc::undefined_metric, "R undefined for zero arc length");
  return 1.0 - arc_length_to_h(list, h) / total;
}

double a_value(std::uint64_t token_count, double h) {
  return static_cast<double>(token_count) / (h * h);
}

LexicalProfile lexical_profile(const Corpus& corpus, bool han_only) {
  const FrequencyList list = build_frequency_list(corpus);
  LexicalProfile p;
  p.id = corpus.id;
  p.token_count = list.token_total;
  p.type_count = list.type_count();
  p.ttr = static_cast<double>(p.type_count) / static_cast<double>(p.token_count);
  const HapaxStats hapax = hapax_stats(list);
  p.hapax_count = hapax.count;
  p.hapax_proportion = hapax.proportion;
  const MonosyllabicStats mono = monosyllabic_stats(list, han_only);
  p.monosyllabic_type_count = mono.count;
  p.monosyllabic_proportion = mono.proportion;
  p.h_point = h_point(list);
  p.arc_length_total = arc_length_total(list);
  if (p.type_count >= 2 && p.h_point <= static_cast<double>(p.type_count)) {
    p.arc_length_to_h = arc_length_to_h(list, p.h_point);
    if (p.arc_length_total > 0.0)
      p.r_value = 1.0 - *p.arc_length_to_h / p.arc_length_total;
  }
  p.a_value = a_value(p.token_count, p.h_point);
  return p;
}

}  // namespace corvar
