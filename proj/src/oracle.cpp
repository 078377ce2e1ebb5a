#include "ballseq/oracle.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "ballseq/counting.hpp"

namespace ballseq {
namespace {

// Reused scratch for classifying many colorings of one palette.
class Classifier {
 public:
  explicit Classifier(std::uint32_t palette_size) : occurrences_(palette_size, 0) {}

  ClassStats operator()(std::span<const Color> colors) {
    ClassStats stats;
    for (Color c : colors) {
      if (occurrences_[c]++ > 0) ++stats.mu;
    }
    for (Color c : colors) {
      const std::uint32_t seen = occurrences_[c];
      if (seen == 0) continue;  // color already tallied
      ++stats.distinct;
      if (seen >= 2) {
        ++stats.lambda;
        stats.m += seen;
      }
      occurrences_[c] = 0;
    }
    return stats;
  }

 private:
  std::vector<std::uint32_t> occurrences_;
};

// Native-width tallies for one worker; merged by exact addition.
struct Tally {
  std::int64_t k;
  std::vector<std::uint64_t> cells;  // index m * (k / 2 + 1) + lambda
  std::vector<std::uint64_t> repeats;

  explicit Tally(std::int64_t length)
      : k(length),
        cells(static_cast<std::size_t>((length + 1) * (length / 2 + 1)), 0),
        repeats(static_cast<std::size_t>(std::max<std::int64_t>(length, 1)), 0) {}

  void add(const ClassStats& s) {
    ++cells[static_cast<std::size_t>(s.m * (k / 2 + 1) + s.lambda)];
    ++repeats[static_cast<std::size_t>(s.mu)];
  }

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] += other.cells[i];
    for (std::size_t i = 0; i < repeats.size(); ++i) repeats[i] += other.repeats[i];
  }
};

// Every coloring whose first ball has a color in first_colors, visited with a
// mixed-radix counter over the remaining positions.
Tally enumerate_prefixes(std::int64_t k, std::uint32_t n, const std::vector<Color>& first_colors) {
  Tally tally(k);
  Classifier classify_span(n);
  std::vector<Color> colors(static_cast<std::size_t>(k), 0);
  for (Color first : first_colors) {
    colors[0] = first;
    std::fill(colors.begin() + 1, colors.end(), 0);
    while (true) {
      tally.add(classify_span(colors));
      std::size_t pos = colors.size() - 1;
      while (pos >= 1 && colors[pos] + 1 == n) colors[pos--] = 0;
      if (pos == 0) break;
      ++colors[pos];
    }
  }
  return tally;
}

}  // namespace

Coloring::Coloring(std::vector<Color> colors, std::uint32_t palette_size)
    : colors_(std::move(colors)), palette_size_(palette_size) {
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] >= palette_size_) {
      throw std::invalid_argument("color " + std::to_string(colors_[i]) + " at position " +
                                  std::to_string(i) + " outside palette of size " +
                                  std::to_string(palette_size_));
    }
  }
}

Coloring Coloring::from_letters(std::string_view letters, std::uint32_t palette_size) {
  std::vector<Color> colors;
  colors.reserve(letters.size());
  for (char ch : letters) {
    if (ch < 'A' || ch > 'Z') {
      throw std::invalid_argument(std::string("color letter must be A-Z, got '") + ch + "'");
    }
    colors.push_back(static_cast<Color>(ch - 'A'));
  }
  return Coloring(std::move(colors), palette_size);
}

ClassStats classify(const Coloring& coloring) {
  return Classifier(coloring.palette_size())(coloring.colors());
}

BudgetExceeded::BudgetExceeded(std::int64_t k, std::int64_t n, std::uint64_t budget)
    : std::runtime_error("enumerating " + std::to_string(n) + "^" + std::to_string(k) +
                         " colorings exceeds the budget of " + std::to_string(budget)),
      k_(k),
      n_(n),
      budget_(budget) {}

bool within_budget(std::int64_t k, std::int64_t n, std::uint64_t budget) {
  if (k == 0 || n <= 1) return budget >= (k > 0 && n == 0 ? 0U : 1U);
  std::uint64_t total = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    if (total > budget / static_cast<std::uint64_t>(n)) return false;
    total *= static_cast<std::uint64_t>(n);
  }
  return total <= budget;
}

DistributionTable enumerate_counts(std::int64_t k, std::int64_t n,
                                   const EnumerationOptions& options) {
  if (k < 0 || n < 0) throw std::invalid_argument("k and n must be non-negative");
  if (n > std::int64_t{UINT32_MAX}) throw std::invalid_argument("palette too large");
  if (!within_budget(k, n, options.budget)) throw BudgetExceeded(k, n, options.budget);

  Tally tally(k);
  if (k == 0) {
    tally.add(ClassStats{});
  } else if (n > 0) {
    const auto palette = static_cast<std::uint32_t>(n);
    unsigned workers = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                            : options.threads;
    workers = std::min<unsigned>(workers, palette);

    std::vector<std::vector<Color>> shards(workers);
    for (Color c = 0; c < palette; ++c) shards[c % workers].push_back(c);

    if (workers == 1) {
      tally = enumerate_prefixes(k, palette, shards[0]);
    } else {
      std::vector<std::future<Tally>> parts;
      parts.reserve(workers);
      for (const auto& shard : shards) {
        parts.push_back(std::async(std::launch::async, enumerate_prefixes, k, palette,
                                   std::cref(shard)));
      }
      // Merged in shard order; addition is exact so the order is immaterial.
      for (auto& part : parts) tally.merge(part.get());
    }
  }

  DistributionTable table;
  table.k = k;
  table.n = n;
  for (std::int64_t m = 0; m <= k; ++m) {
    for (std::int64_t lambda = 0; lambda <= m / 2; ++lambda) {
      table.by_match_cell.emplace(
          MatchCell{m, lambda}, Count(tally.cells[static_cast<std::size_t>(m * (k / 2 + 1) + lambda)]));
    }
  }
  for (std::size_t mu = 0; mu < tally.repeats.size(); ++mu) {
    table.by_repeat_count.emplace(static_cast<std::int64_t>(mu), Count(tally.repeats[mu]));
  }
  return table;
}

VerificationReport compare(const DistributionTable& formula, const DistributionTable& oracle) {
  VerificationReport report;
  report.k = oracle.k;
  report.n = oracle.n;
  auto check = [&](std::string cell, const Count& expected, const Count& actual) {
    if (expected != actual) report.mismatches.push_back({std::move(cell), expected, actual});
  };

  // Walk the union of keys so a cell missing on one side reads as zero there.
  auto lookup = [](const auto& map, const auto& key) {
    auto it = map.find(key);
    return it == map.end() ? Count(0) : it->second;
  };
  std::map<MatchCell, int> cells;
  for (const auto& [cell, _] : formula.by_match_cell) cells[cell];
  for (const auto& [cell, _] : oracle.by_match_cell) cells[cell];
  for (const auto& [cell, _] : cells) {
    ++report.cells_checked;
    check("m=" + std::to_string(cell.m) + ",lambda=" + std::to_string(cell.lambda),
          lookup(formula.by_match_cell, cell), lookup(oracle.by_match_cell, cell));
  }
  std::map<std::int64_t, int> buckets;
  for (const auto& [mu, _] : formula.by_repeat_count) buckets[mu];
  for (const auto& [mu, _] : oracle.by_repeat_count) buckets[mu];
  for (const auto& [mu, _] : buckets) {
    ++report.cells_checked;
    check("mu=" + std::to_string(mu), lookup(formula.by_repeat_count, mu),
          lookup(oracle.by_repeat_count, mu));
  }

  const Count expected_total =
      power(static_cast<std::uint64_t>(oracle.n), static_cast<std::uint64_t>(oracle.k));
  check("formula_match_total", expected_total, formula.match_total());
  check("formula_repeat_total", expected_total, formula.repeat_total());
  check("oracle_match_total", expected_total, oracle.match_total());
  check("oracle_repeat_total", expected_total, oracle.repeat_total());

  report.passed = report.mismatches.empty();
  return report;
}

VerificationReport verify(std::int64_t k, std::int64_t n, const EnumerationOptions& options) {
  DistributionTable census = enumerate_counts(k, n, options);
  return compare(distribution_table(k, n), census);
}

}  // namespace ballseq
