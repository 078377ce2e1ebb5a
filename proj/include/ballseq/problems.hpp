#pragma once

#include <compare>
#include <cstdint>
#include <map>

#include "ballseq/count.hpp"

namespace ballseq {

struct MatchCell {
  std::int64_t m = 0;
  std::int64_t lambda = 0;

  friend auto operator<=>(const MatchCell&, const MatchCell&) = default;
};

/// All statistic counts for length-k colorings over an n-color palette.
///
/// by_match_cell holds every cell 0 <= m <= k, 0 <= lambda <= m / 2 (zero
/// cells included). by_repeat_count holds mu in [0, max(k - 1, 0)]; for the
/// empty sequence (k = 0) the single bucket mu = 0 holds 1.
struct DistributionTable {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::map<MatchCell, Count> by_match_cell;
  std::map<std::int64_t, Count> by_repeat_count;

  Count match_total() const;
  Count repeat_total() const;

  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

/// Length-k colorings with exactly m matched balls (sum of z_count over lambda).
/// m = 0 gives the injective colorings, m = 1 gives 0.
Count problem1_matches_fixed_length(std::int64_t k, std::int64_t n, std::int64_t m);

/// problem1 summed over every length k in [m, m + n - 1]. For m = 0 the
/// lengths are [1, n] (injective colorings, empty sequence excluded).
Count problem2_matches_any_length(std::int64_t n, std::int64_t m);

/// Length-k colorings with exactly mu balls whose color already occurred
/// earlier: sum over lambda of z_count(k, n, mu + lambda, lambda).
Count problem3_repeats_fixed_length(std::int64_t k, std::int64_t n, std::int64_t mu);

/// problem3 summed over every length k in [mu + 1, n + mu]. The empty
/// sequence is never counted, including for mu = 0.
Count problem4_repeats_any_length(std::int64_t n, std::int64_t mu);

DistributionTable distribution_table(std::int64_t k, std::int64_t n);

}  // namespace ballseq
