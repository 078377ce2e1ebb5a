#include "ballseq/problems.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ballseq/counting.hpp"

namespace ballseq {
namespace {

void require_non_negative(std::string_view what, std::int64_t value) {
  if (value < 0) {
    throw std::invalid_argument(std::string(what) + " must be non-negative, got " +
                                std::to_string(value));
  }
}

}  // namespace

Count DistributionTable::match_total() const {
  Count total(0);
  for (const auto& [cell, count] : by_match_cell) total += count;
  return total;
}

Count DistributionTable::repeat_total() const {
  Count total(0);
  for (const auto& [mu, count] : by_repeat_count) total += count;
  return total;
}

Count problem1_matches_fixed_length(std::int64_t k, std::int64_t n, std::int64_t m) {
  require_non_negative("k", k);
  require_non_negative("n", n);
  require_non_negative("m", m);
  const std::int64_t upper = std::min(m / 2, n - k + m);
  Count total(0);
  for (std::int64_t lambda = 0; lambda <= upper; ++lambda) {
    total += z_count(SequenceClass(k, n, m, lambda));
  }
  return total;
}

Count problem2_matches_any_length(std::int64_t n, std::int64_t m) {
  require_non_negative("n", n);
  require_non_negative("m", m);
  // With no matches every ball is a first occurrence, so lengths run to n.
  const std::int64_t first = m == 0 ? 1 : m;
  const std::int64_t last = m == 0 ? n : m + n - 1;
  Count total(0);
  for (std::int64_t k = first; k <= last; ++k) total += problem1_matches_fixed_length(k, n, m);
  return total;
}

Count problem3_repeats_fixed_length(std::int64_t k, std::int64_t n, std::int64_t mu) {
  require_non_negative("k", k);
  require_non_negative("n", n);
  require_non_negative("mu", mu);
  if (mu == 0) return z_count(SequenceClass(k, n, 0, 0));
  if (mu > k - 1 || k > n + mu) return Count(0);
  Count total(0);
  for (std::int64_t lambda = 0; lambda <= mu; ++lambda) {
    total += z_count(SequenceClass(k, n, mu + lambda, lambda));
  }
  return total;
}

Count problem4_repeats_any_length(std::int64_t n, std::int64_t mu) {
  require_non_negative("n", n);
  require_non_negative("mu", mu);
  Count total(0);
  for (std::int64_t k = mu + 1; k <= n + mu; ++k) total += problem3_repeats_fixed_length(k, n, mu);
  return total;
}

DistributionTable distribution_table(std::int64_t k, std::int64_t n) {
  require_non_negative("k", k);
  require_non_negative("n", n);
  DistributionTable table;
  table.k = k;
  table.n = n;
  for (std::int64_t m = 0; m <= k; ++m) {
    for (std::int64_t lambda = 0; lambda <= m / 2; ++lambda) {
      table.by_match_cell.emplace(MatchCell{m, lambda}, z_count(SequenceClass(k, n, m, lambda)));
    }
  }
  for (std::int64_t mu = 0; mu <= std::max<std::int64_t>(k - 1, 0); ++mu) {
    table.by_repeat_count.emplace(mu, problem3_repeats_fixed_length(k, n, mu));
  }
  return table;
}

}  // namespace ballseq
