#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ballseq/count.hpp"

namespace ballseq {

/// Parameter cell (k, n, m, lambda): sequence length, palette size, matched
/// balls, repeated colors. Negative values are rejected at construction;
/// infeasible but non-negative combinations are allowed and count as zero.
class SequenceClass {
 public:
  SequenceClass(std::int64_t k, std::int64_t n, std::int64_t m, std::int64_t lambda);

  std::int64_t k() const noexcept { return k_; }
  std::int64_t n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }
  std::int64_t lambda() const noexcept { return lambda_; }

  friend bool operator==(const SequenceClass&, const SequenceClass&) = default;

 private:
  std::int64_t k_;
  std::int64_t n_;
  std::int64_t m_;
  std::int64_t lambda_;
};

enum class Constraint {
  MatchFloor,       // k > n and m < k - n + 1
  LambdaVsHalfM,    // lambda > floor(m / 2)
  LambdaVsSlack,    // lambda > n - k + m
  ExactlyOneMatch,  // m == 1
  ZeroMatchShape,   // m == 0 with lambda != 0 or k > n
};

std::string_view to_string(Constraint c) noexcept;

struct FeasibilityReport {
  bool feasible = true;
  /// Listed in Constraint declaration order.
  std::vector<Constraint> violated_constraints;
};

/// a choose b; zero outside 0 <= b <= a.
Count binomial(std::uint64_t a, std::int64_t b);

/// a (a-1) ... (a-t+1) as a descending product. 1 for t = 0, 0 for t > a.
Count falling_factorial(std::uint64_t a, std::uint64_t t);

/// Number of maps from an m-set onto a lambda-set where every point of the
/// lambda-set has at least two preimages. Inclusion-exclusion over the colors
/// hit at most once; s(0, 0) = 1.
Count doubly_surjective_count(std::uint64_t m, std::uint64_t lambda);

FeasibilityReport feasibility(const SequenceClass& cls);

/// Number of length-k colorings over n labeled colors with exactly m balls
/// sharing their color with another ball and exactly lambda colors used
/// twice or more:
///
///   C(n, lambda) * C(k, m) * (n - lambda)_(k - m) * s(m, lambda)
///
/// Returns 0 for every infeasible class.
Count z_count(const SequenceClass& cls);

}  // namespace ballseq
