#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ballseq/count.hpp"
#include "ballseq/problems.hpp"

namespace ballseq {

using Color = std::uint32_t;

/// A concrete sequence of palette indices, each in [0, n).
class Coloring {
 public:
  Coloring(std::vector<Color> colors, std::uint32_t palette_size);

  /// "AABBC" style: 'A' is color 0, 'B' is color 1, and so on.
  static Coloring from_letters(std::string_view letters, std::uint32_t palette_size);

  std::span<const Color> colors() const noexcept { return colors_; }
  std::uint32_t palette_size() const noexcept { return palette_size_; }
  std::size_t size() const noexcept { return colors_.size(); }

 private:
  std::vector<Color> colors_;
  std::uint32_t palette_size_;
};

struct ClassStats {
  std::int64_t m = 0;         // balls whose color occurs elsewhere in the sequence
  std::int64_t lambda = 0;    // colors occurring at least twice
  std::int64_t mu = 0;        // balls whose color occurred at an earlier position
  std::int64_t distinct = 0;  // colors occurring at least once

  friend bool operator==(const ClassStats&, const ClassStats&) = default;
};

ClassStats classify(const Coloring& coloring);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::int64_t k, std::int64_t n, std::uint64_t budget);

  std::int64_t k() const noexcept { return k_; }
  std::int64_t n() const noexcept { return n_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::int64_t k_;
  std::int64_t n_;
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Workers; the coloring space is split by first-ball color. 0 picks
  /// std::thread::hardware_concurrency().
  unsigned threads = 1;
};

/// True when n^k colorings fit within the budget.
bool within_budget(std::int64_t k, std::int64_t n, std::uint64_t budget);

/// Classifies all n^k colorings. Throws BudgetExceeded when n^k > budget
/// and std::invalid_argument on negative k or n.
DistributionTable enumerate_counts(std::int64_t k, std::int64_t n,
                                   const EnumerationOptions& options = {});

struct Mismatch {
  std::string cell;  // "m=4,lambda=2", "mu=3", or a total such as "oracle_match_total"
  Count formula;
  Count oracle;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::uint64_t cells_checked = 0;
  std::vector<Mismatch> mismatches;
  bool passed = true;
};

/// Compares the exhaustive census against z_count on every (m, lambda) cell,
/// against problem3 on every mu bucket, and both totals against n^k.
VerificationReport verify(std::int64_t k, std::int64_t n, const EnumerationOptions& options = {});

/// Same comparison against a precomputed census.
VerificationReport compare(const DistributionTable& formula, const DistributionTable& oracle);

}  // namespace ballseq
