#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corvar/lexical.hpp"

namespace corvar {

// Tied values receive the mean of the rank positions they occupy.
std::vector<double> average_ranks(const std::vector<double>& values);

// Spearman's rho: Pearson correlation of the average ranks. Throws
// errc::length_mismatch on unequal sizes, errc::degenerate_input when
// n < 3 or either vector is constant.
double spearman_rho(const std::vector<double>& x,
                    const std::vector<double>& y);

struct CorrelationResult {
  double rho = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
  std::string method;  // "exact-permutation" or "t-approximation"

  bool operator==(const CorrelationResult&) const = default;
};

// Two-sided p under the null of independent rankings. n <= 8 enumerates all
// n! permutations exactly; larger n uses the Student-t approximation
// t = rho * sqrt((n-2) / (1 - rho^2)).
CorrelationResult spearman(const std::vector<double>& x,
                           const std::vector<double>& y);

// Exact branch, exposed separately so it can be cross-checked and timed.
// Throws errc::degenerate_input when n > 12 (enumeration would not finish).
double exact_permutation_pvalue(const std::vector<double>& x,
                                const std::vector<double>& y);

struct SizeCorrelationRow {
  std::string metric;
  std::optional<CorrelationResult> result;
  std::string error;  // set when the row's correlation is undefined

  bool operator==(const SizeCorrelationRow&) const = default;
};

// Each lexical metric correlated with token_count across the given
// profiles. Rows that cannot be computed report an error instead of
// aborting the rest.
std::vector<SizeCorrelationRow> correlate_with_size(
    const std::vector<LexicalProfile>& profiles);

}  // namespace corvar
