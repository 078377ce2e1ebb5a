#include "ballseq/counting.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace ballseq {
SequenceClass::SequenceClass(std::int64_t k, std::int64_t n, std::int64_t m, std::int64_t lambda)
    : k_(k), n_(n), m_(m), lambda_(lambda) {
  if (k < 0 || n < 0 || m < 0 || lambda < 0) {
    throw std::invalid_argument("SequenceClass parameters must be non-negative (k=" +
                                std::to_string(k) + ", n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) +
                                ", lambda=" + std::to_string(lambda) + ")");
  }
}

std::string_view to_string(Constraint c) noexcept {
  switch (c) {
    case Constraint::MatchFloor: return "MatchFloor";
    case Constraint::LambdaVsHalfM: return "LambdaVsHalfM";
    case Constraint::LambdaVsSlack: return "LambdaVsSlack";
    case Constraint::ExactlyOneMatch: return "ExactlyOneMatch";
    case Constraint::ZeroMatchShape: return "ZeroMatchShape";
  }
  return "Unknown";
}

Count binomial(std::uint64_t a, std::int64_t b) {
  if (b < 0 || static_cast<std::uint64_t>(b) > a) return Count(0);
  const std::uint64_t r = std::min<std::uint64_t>(static_cast<std::uint64_t>(b),
                                                  a - static_cast<std::uint64_t>(b));
  Count result(1);
  // After step i the accumulator is C(a - r + i, i), so each division is exact.
  for (std::uint64_t i = 1; i <= r; ++i) {
    result *= Count(a - r + i);
    result /= Count(i);
  }
  return result;
}

Count falling_factorial(std::uint64_t a, std::uint64_t t) {
  if (t > a) return Count(0);
  Count result(1);
  for (std::uint64_t i = 0; i < t; ++i) result *= Count(a - i);
  return result;
}

Count doubly_surjective_count(std::uint64_t m, std::uint64_t lambda) {
  // j colors are forced to be hit at most once; of those, i are hit exactly
  // once (by an injective choice of i of the m elements), and the other m - i
  // elements go anywhere among the remaining lambda - j colors.
  //
  //   sum_j (-1)^j C(lambda, j) sum_{i <= min(j, m)} C(j, i) m!/(m-i)! (lambda-j)^(m-i)
  //
  // Binomials and falling factorials are carried incrementally along each row.
  SignedCount total = 0;
  SignedCount outer_binom = 1;  // C(lambda, j)
  for (std::uint64_t j = 0; j <= lambda; ++j) {
    if (j > 0) {
      outer_binom *= lambda - j + 1;
      outer_binom /= j;
    }
    SignedCount inner = 0;
    SignedCount inner_binom = 1;  // C(j, i)
    SignedCount falling = 1;      // m (m-1) ... (m-i+1)
    for (std::uint64_t i = 0; i <= std::min(j, m); ++i) {
      if (i > 0) {
        inner_binom *= j - i + 1;
        inner_binom /= i;
        falling *= m - i + 1;
      }
      inner += inner_binom * falling * power(lambda - j, m - i).value();
    }
    if (j % 2 == 0) {
      total += outer_binom * inner;
    } else {
      total -= outer_binom * inner;
    }
  }
  assert(total >= 0);
  return Count(total);
}

FeasibilityReport feasibility(const SequenceClass& cls) {
  const auto k = cls.k();
  const auto n = cls.n();
  const auto m = cls.m();
  const auto lambda = cls.lambda();

  FeasibilityReport report;
  auto& v = report.violated_constraints;
  if (k > n && m < k - n + 1) v.push_back(Constraint::MatchFloor);
  if (lambda > m / 2) v.push_back(Constraint::LambdaVsHalfM);
  if (lambda > n - k + m) v.push_back(Constraint::LambdaVsSlack);
  if (m == 1) v.push_back(Constraint::ExactlyOneMatch);
  if (m == 0 && (lambda != 0 || k > n)) v.push_back(Constraint::ZeroMatchShape);
  report.feasible = v.empty();
  return report;
}

Count z_count(const SequenceClass& cls) {
  if (!feasibility(cls).feasible) return Count(0);
  const auto k = static_cast<std::uint64_t>(cls.k());
  const auto n = static_cast<std::uint64_t>(cls.n());
  const auto m = static_cast<std::uint64_t>(cls.m());
  const auto lambda = static_cast<std::uint64_t>(cls.lambda());
  // A matched-ball count above k leaves no positions to choose.
  if (m > k) return Count(0);
  // Feasibility guarantees lambda <= n - k + m, hence lambda <= n and
  // k - m <= n - lambda.
  return binomial(n, cls.lambda()) * binomial(k, cls.m()) * falling_factorial(n - lambda, k - m) *
         doubly_surjective_count(m, lambda);
}

}  // namespace ballseq
