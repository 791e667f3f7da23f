#include "reference.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace corvar::ref {

namespace {

// Intersection of the segment (x1,y1)-(x2,y2) with the line y = x,
// returned as the x coordinate.
double diagonal_crossing(double x1, double y1, double x2, double y2) {
  const double t = (y1 - x1) / ((x2 - x1) - (y2 - y1));
  return x1 + t * (x2 - x1);
}

double pearson_from_scratch(const std::vector<double>& a,
                            const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    saa += a[i] * a[i];
    sbb += b[i] * b[i];
    sab += a[i] * b[i];
  }
  const double num = n * sab - sa * sb;
  const double den = std::sqrt((n * saa - sa * sa) * (n * sbb - sb * sb));
  return num / den;
}

}  // namespace

double h_point_geometric(const FrequencyList& list) {
  const std::size_t v = list.type_count();
  if (v == 0) throw std::invalid_argument("empty frequency list");

  for (std::size_t r = 1; r <= v; ++r)
    if (list.frequency_at(r) == r) return static_cast<double>(r);

  // Points (r, f(r)) for r = 1..V plus the closing point (V+1, 0); look for
  // the segment whose endpoints straddle the diagonal.
  const auto y = [&](std::size_t r) {
    return r <= v ? static_cast<double>(list.frequency_at(r)) : 0.0;
  };
  for (std::size_t r = 1; r <= v; ++r) {
    const double x1 = static_cast<double>(r);
    const double x2 = static_cast<double>(r + 1);
    const bool above1 = y(r) > x1;
    const bool above2 = y(r + 1) > x2;
    if (above1 != above2) return diagonal_crossing(x1, y(r), x2, y(r + 1));
  }
  // Only reachable when f(1) < 1, which frequencies never are.
  throw std::logic_error("no diagonal crossing found");
}

double arc_length_serial(const FrequencyList& list) {
  double total = 0.0;
  for (std::size_t r = 1; r + 1 <= list.type_count(); ++r) {
    const double drop = static_cast<double>(list.frequency_at(r)) -
                        static_cast<double>(list.frequency_at(r + 1));
    total += std::hypot(drop, 1.0);
  }
  return total;
}

double corpus_mdd_naive(const ParsedCorpus& corpus) {
  double sum_of_means = 0.0;
  std::size_t measured = 0;
  for (const auto& sentence : corpus.sentences) {
    double total = 0.0;
    std::size_t arcs = 0;
    for (const auto& tok : sentence.tokens) {
      if (tok.head == 0) continue;
      total += std::abs(static_cast<double>(tok.head) -
                        static_cast<double>(tok.index));
      ++arcs;
    }
    if (arcs == 0) continue;
    sum_of_means += total / static_cast<double>(arcs);
    ++measured;
  }
  if (measured == 0) throw std::invalid_argument("no measurable sentence");
  return sum_of_means / static_cast<double>(measured);
}

FrequencyList frequency_list_map(const Corpus& corpus) {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;
  for (const auto& sentence : corpus.sentences)
    for (const auto& token : sentence.tokens) {
      ++counts[token.text()];
      ++total;
    }

  FrequencyList list;
  list.token_total = total;
  list.entries.reserve(counts.size());
  for (const auto& [text, freq] : counts)
    list.entries.push_back(FrequencyEntry{text, freq});
  std::stable_sort(list.entries.begin(), list.entries.end(),
                   [](const FrequencyEntry& a, const FrequencyEntry& b) {
                     return a.frequency > b.frequency;
                   });
  return list;
}

std::vector<double> average_ranks_quadratic(
    const std::vector<double>& values) {
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::size_t less = 0;
    std::size_t equal = 0;
    for (const double v : values) {
      if (v < values[i]) ++less;
      if (v == values[i]) ++equal;
    }
    ranks[i] = static_cast<double>(less) +
               (static_cast<double>(equal) + 1.0) / 2.0;
  }
  return ranks;
}

double exact_pvalue_full(const std::vector<double>& x,
                         const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3)
    throw std::invalid_argument("bad series");
  const std::size_t n = x.size();
  if (n > 7) throw std::invalid_argument("too long for the naive oracle");

  const auto rho_of = [&](const std::vector<double>& ys) {
    return pearson_from_scratch(average_ranks_quadratic(x),
                                average_ranks_quadratic(ys));
  };
  const double observed = std::abs(rho_of(y));

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end());

  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  do {
    std::vector<double> permuted(n);
    for (std::size_t i = 0; i < n; ++i) permuted[i] = y[order[i]];
    if (std::abs(rho_of(permuted)) >= observed - 1e-12) ++hits;
    ++total;
  } while (std::next_permutation(order.begin(), order.end()));
  return static_cast<double>(hits) / static_cast<double>(total);
}

std::uint64_t count_occurrences(const Corpus& corpus, const std::string& word) {
  std::uint64_t n = 0;
  for (const auto& sentence : corpus.sentences)
    for (const auto& token : sentence.tokens)
      if (token.text() == word) ++n;
  return n;
}

}  // namespace corvar::ref
