#include "corvar/rank_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "corvar/errors.hpp"

namespace corvar {

namespace {

// Comparisons of permuted correlations against the observed one tolerate
// this much float noise so ties count as "at least as extreme".
constexpr double kTieSlack = 1e-12;

std::vector<double> centered(const std::vector<double>& ranks) {
  const double mean =
      std::accumulate(ranks.begin(), ranks.end(), 0.0) /
      static_cast<double>(ranks.size());
  std::vector<double> out(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) out[i] = ranks[i] - mean;
  return out;
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (const double x : v) s += x * x;
  return std::sqrt(s);
}

void check_pair(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size())
    throw_error(errc::length_mismatch,
                "series lengths differ: " + std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()));
  if (x.size() < 3)
    throw_error(errc::degenerate_input,
                "need at least 3 paired observations, got " +
                    std::to_string(x.size()));
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });

  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j (0-based) share the mean 1-based rank
    const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

double spearman_rho(const std::vector<double>& x,
                    const std::vector<double>& y) {
  check_pair(x, y);
  const auto rx = centered(average_ranks(x));
  const auto ry = centered(average_ranks(y));
  const double nx = norm(rx);
  const double ny = norm(ry);
  if (nx == 0.0 || ny == 0.0)
    throw_error(errc::degenerate_input,
                "rank correlation undefined for a constant series");
  double dot = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) dot += rx[i] * ry[i];
  return std::clamp(dot / (nx * ny), -1.0, 1.0);
}

double exact_permutation_pvalue(const std::vector<double>& x,
                                const std::vector<double>& y) {
  check_pair(x, y);
  const std::size_t n = x.size();
  if (n > 12)
    throw_error(errc::degenerate_input,
                "exact permutation test limited to n <= 12, got " +
                    std::to_string(n));

  const auto rx = centered(average_ranks(x));
  const auto ry = centered(average_ranks(y));
  const double denom = norm(rx) * norm(ry);
  if (denom == 0.0)
    throw_error(errc::degenerate_input,
                "rank correlation undefined for a constant series");

  double observed_dot = 0.0;
  for (std::size_t i = 0; i < n; ++i) observed_dot += rx[i] * ry[i];
  const double threshold =
      (std::abs(observed_dot) / denom - kTieSlack) * denom;

  // One branch per choice of the first position; each branch enumerates the
  // remaining (n-1)! assignments. Integer counts keep the total exact and
  // independent of scheduling.
  std::vector<std::uint64_t> branch_hits(n, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (n >= 7)
#endif
  for (std::ptrdiff_t first = 0; first < static_cast<std::ptrdiff_t>(n);
       ++first) {
    std::vector<std::size_t> rest;
    rest.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i)
      if (i != static_cast<std::size_t>(first)) rest.push_back(i);

    std::uint64_t hits = 0;
    do {
      double dot = rx[0] * ry[static_cast<std::size_t>(first)];
      for (std::size_t i = 1; i < n; ++i) dot += rx[i] * ry[rest[i - 1]];
      if (std::abs(dot) >= threshold) ++hits;
    } while (std::next_permutation(rest.begin(), rest.end()));
    branch_hits[static_cast<std::size_t>(first)] = hits;
  }

  std::uint64_t total_hits = 0;
  for (const std::uint64_t h : branch_hits) total_hits += h;
  return static_cast<double>(total_hits) / static_cast<double>(factorial(n));
}

CorrelationResult spearman(const std::vector<double>& x,
                           const std::vector<double>& y) {
  CorrelationResult result;
  result.rho = spearman_rho(x, y);
  result.n = x.size();
  if (x.size() <= 8) {
    result.method = "exact-permutation";
    result.p_value = exact_permutation_pvalue(x, y);
  } else {
    result.method = "t-approximation";
    const double n = static_cast<double>(x.size());
    const double r2 = result.rho * result.rho;
    double p;
    if (r2 >= 1.0) {
      p = 0.0;
    } else {
      const double t = result.rho * std::sqrt((n - 2.0) / (1.0 - r2));
      boost::math::students_t_distribution<double> dist(n - 2.0);
      p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
    }
    if (p <= 0.0) p = std::numeric_limits<double>::min();
    result.p_value = std::min(p, 1.0);
  }
  return result;
}

std::vector<SizeCorrelationRow> correlate_with_size(
    const std::vector<LexicalProfile>& profiles) {
  struct MetricSpec {
    const char* key;
    double (*get)(const LexicalProfile&);
    bool (*defined)(const LexicalProfile&);
  };
  static const auto always = [](const LexicalProfile&) { return true; };
  static const MetricSpec specs[] = {
      {"type_count",
       [](const LexicalProfile& p) { return static_cast<double>(p.type_count); },
       always},
      {"ttr", [](const LexicalProfile& p) { return p.ttr; }, always},
      {"monosyllabic_type_count",
       [](const LexicalProfile& p) {
         return static_cast<double>(p.monosyllabic_type_count);
       },
       always},
      {"monosyllabic_proportion",
       [](const LexicalProfile& p) { return p.monosyllabic_proportion; },
       always},
      {"hapax_count",
       [](const LexicalProfile& p) { return static_cast<double>(p.hapax_count); },
       always},
      {"hapax_proportion",
       [](const LexicalProfile& p) { return p.hapax_proportion; }, always},
      {"h_point", [](const LexicalProfile& p) { return p.h_point; }, always},
      {"r_value", [](const LexicalProfile& p) { return *p.r_value; },
       [](const LexicalProfile& p) { return p.r_value.has_value(); }},
      {"a_value", [](const LexicalProfile& p) { return p.a_value; }, always},
  };

  std::vector<double> sizes;
  sizes.reserve(profiles.size());
  for (const auto& p : profiles)
    sizes.push_back(static_cast<double>(p.token_count));

  std::vector<SizeCorrelationRow> rows;
  rows.reserve(std::size(specs));
  for (const auto& spec : specs) {
    SizeCorrelationRow row;
    row.metric = spec.key;
    bool all_defined = true;
    for (const auto& p : profiles) all_defined = all_defined && spec.defined(p);
    if (!all_defined) {
      row.error = "metric undefined for at least one corpus";
      rows.push_back(std::move(row));
      continue;
    }
    std::vector<double> values;
    values.reserve(profiles.size());
    for (const auto& p : profiles) values.push_back(spec.get(p));
    try {
      row.result = spearman(values, sizes);
    } catch (const error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace corvar
