#include "ballseq/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ballseq/counting.hpp"
#include "ballseq/oracle.hpp"
#include "ballseq/problems.hpp"

namespace ballseq::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json envelope(Json query, Json result) {
  Json doc;
  doc["query"] = std::move(query);
  doc["result"] = std::move(result);
  doc["schema_version"] = kSchemaVersion;
  return doc;
}

Json table_json(const DistributionTable& table) {
  Json cells = Json::array();
  for (const auto& [cell, count] : table.by_match_cell) {
    cells.push_back({{"m", cell.m}, {"lambda", cell.lambda}, {"count", to_decimal(count)}});
  }
  Json repeats = Json::array();
  for (const auto& [mu, count] : table.by_repeat_count) {
    repeats.push_back({{"mu", mu}, {"count", to_decimal(count)}});
  }
  return {{"k", table.k}, {"n", table.n}, {"by_match_cell", std::move(cells)},
          {"by_repeat_count", std::move(repeats)}};
}

void write_tsv(const DistributionTable& table, std::ostream& out) {
  out << "m\tlambda\tcount\n";
  for (const auto& [cell, count] : table.by_match_cell) {
    out << cell.m << '\t' << cell.lambda << '\t' << count << '\n';
  }
  out << "\nmu\tcount\n";
  for (const auto& [mu, count] : table.by_repeat_count) out << mu << '\t' << count << '\n';
}

Json report_json(const VerificationReport& report) {
  Json mismatches = Json::array();
  for (const auto& mm : report.mismatches) {
    mismatches.push_back(
        {{"cell", mm.cell}, {"formula", to_decimal(mm.formula)}, {"oracle", to_decimal(mm.oracle)}});
  }
  return {{"k", report.k},
          {"n", report.n},
          {"cells_checked", report.cells_checked},
          {"passed", report.passed},
          {"mismatches", std::move(mismatches)}};
}

void write_report_text(const VerificationReport& report, std::ostream& out) {
  out << "k=" << report.k << " n=" << report.n << ": " << (report.passed ? "PASS" : "FAIL")
      << " cells_checked=" << report.cells_checked
      << " mismatches=" << report.mismatches.size() << '\n';
  for (const auto& mm : report.mismatches) {
    out << "  mismatch " << mm.cell << " formula=" << mm.formula << " oracle=" << mm.oracle
        << '\n';
  }
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

struct Params {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  std::int64_t max_k = 0;
  std::int64_t max_n = 0;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  // Per subcommand, since each has its own default.
  std::map<std::string, std::string> formats;
  bool no_timing = false;
};

void add_int(CLI::App* cmd, const std::string& flag, std::int64_t& target, const std::string& help) {
  cmd->add_option(flag, target, help)->required()->check(CLI::NonNegativeNumber);
}

const std::string& add_format(CLI::App* cmd, Params& p, std::vector<std::string> choices) {
  std::string& target = p.formats[cmd->get_name()];
  target = choices.front();
  cmd->add_option("--format", target, "Output format")
      ->check(CLI::IsMember(std::move(choices)))
      ->capture_default_str();
  return target;
}

// A single-count subcommand: computes the count and echoes the query.
void scalar_command(CLI::App& app, const std::string& name, const std::string& description,
                    Params& p, std::vector<std::pair<std::string, std::int64_t*>> fields,
                    std::function<Count()> compute, std::ostream& out) {
  CLI::App* cmd = app.add_subcommand(name, description);
  for (auto& [flag, target] : fields) add_int(cmd, "--" + flag, *target, flag);
  const std::string& format = add_format(cmd, p, {"text", "json"});
  cmd->callback([&format, name, fields, compute, &out] {
    const Count value = compute();
    if (format == "json") {
      Json query{{"command", name}};
      for (const auto& [flag, target] : fields) query[flag] = *target;
      out << envelope(std::move(query), to_decimal(value)).dump(2) << '\n';
    } else {
      out << value << '\n';
    }
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of colored ball sequences by matched balls, repeated colors and "
               "repeats, with an exhaustive verifier."};
  app.name("ballseq");
  app.require_subcommand(1);

  Params p;
  int status = kOk;

  scalar_command(app, "z", "Colorings with exactly m matched balls and lambda repeated colors", p,
                 {{"k", &p.k}, {"n", &p.n}, {"m", &p.m}, {"lambda", &p.lambda}},
                 [&p] { return z_count(SequenceClass(p.k, p.n, p.m, p.lambda)); }, out);
  scalar_command(app, "s", "Doubly-surjective maps from an m-set onto a lambda-set", p,
                 {{"m", &p.m}, {"lambda", &p.lambda}},
                 [&p] {
                   return doubly_surjective_count(static_cast<std::uint64_t>(p.m),
                                                  static_cast<std::uint64_t>(p.lambda));
                 },
                 out);
  scalar_command(app, "problem1", "Length-k colorings with exactly m matched balls", p,
                 {{"k", &p.k}, {"n", &p.n}, {"m", &p.m}},
                 [&p] { return problem1_matches_fixed_length(p.k, p.n, p.m); }, out);
  scalar_command(app, "problem2",
                 "Colorings of any length with exactly m matched balls (m = 0: lengths 1..n)", p,
                 {{"n", &p.n}, {"m", &p.m}},
                 [&p] { return problem2_matches_any_length(p.n, p.m); }, out);
  scalar_command(app, "problem3", "Length-k colorings with exactly mu repeats", p,
                 {{"k", &p.k}, {"n", &p.n}, {"mu", &p.mu}},
                 [&p] { return problem3_repeats_fixed_length(p.k, p.n, p.mu); }, out);
  scalar_command(app, "problem4",
                 "Colorings of any length k in [mu+1, n+mu] with exactly mu repeats "
                 "(the empty sequence is never counted, also for mu = 0)",
                 p, {{"n", &p.n}, {"mu", &p.mu}},
                 [&p] { return problem4_repeats_any_length(p.n, p.mu); }, out);

  CLI::App* table = app.add_subcommand("table", "Full (m, lambda) and mu distributions");
  add_int(table, "--k", p.k, "sequence length");
  add_int(table, "--n", p.n, "palette size");
  const std::string& table_format = add_format(table, p, {"tsv", "json"});
  table->callback([&] {
    const DistributionTable t = distribution_table(p.k, p.n);
    if (table_format == "json") {
      out << envelope({{"command", "table"}, {"k", p.k}, {"n", p.n}}, table_json(t)).dump(2)
          << '\n';
    } else {
      write_tsv(t, out);
    }
  });

  auto add_oracle_options = [&](CLI::App* cmd) {
    cmd->add_option("--budget", p.budget, "Maximum colorings to enumerate per pair")
        ->capture_default_str();
    cmd->add_option("--threads", p.threads, "Enumeration workers (0 = hardware concurrency)")
        ->capture_default_str();
    cmd->add_flag("--no-timing", p.no_timing, "Omit elapsed time from the report");
    return std::cref(add_format(cmd, p, {"text", "json"}));
  };

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check the formulas against enumeration");
  add_int(verify_cmd, "--k", p.k, "sequence length");
  add_int(verify_cmd, "--n", p.n, "palette size");
  const std::string& verify_format = add_oracle_options(verify_cmd);
  verify_cmd->callback([&] {
    const auto start = std::chrono::steady_clock::now();
    const VerificationReport report = verify(p.k, p.n, {p.budget, p.threads});
    const auto ms = elapsed_ms(start);
    if (verify_format == "json") {
      Json result = report_json(report);
      if (!p.no_timing) result["elapsed_ms"] = ms;
      out << envelope({{"command", "verify"}, {"k", p.k}, {"n", p.n}, {"budget", p.budget}},
                      std::move(result))
                 .dump(2)
          << '\n';
    } else {
      write_report_text(report, out);
      if (!p.no_timing) out << "elapsed_ms=" << ms << '\n';
    }
    status = report.passed ? kOk : kMismatch;
  });

  CLI::App* range_cmd =
      app.add_subcommand("verify-range", "Verify every (k, n) with k <= max-k, n <= max-n");
  add_int(range_cmd, "--max-k", p.max_k, "largest sequence length");
  add_int(range_cmd, "--max-n", p.max_n, "largest palette size");
  const std::string& range_format = add_oracle_options(range_cmd);
  range_cmd->callback([&] {
    const auto start = std::chrono::steady_clock::now();
    std::vector<VerificationReport> reports;
    std::vector<std::pair<std::int64_t, std::int64_t>> skipped;
    for (std::int64_t k = 0; k <= p.max_k; ++k) {
      for (std::int64_t n = 0; n <= p.max_n; ++n) {
        if (!within_budget(k, n, p.budget)) {
          skipped.emplace_back(k, n);
          continue;
        }
        reports.push_back(verify(k, n, {p.budget, p.threads}));
      }
    }
    const auto failed = static_cast<std::size_t>(std::count_if(
        reports.begin(), reports.end(), [](const auto& r) { return !r.passed; }));
    const auto ms = elapsed_ms(start);
    if (range_format == "json") {
      Json result;
      result["pairs_verified"] = reports.size();
      result["pairs_failed"] = failed;
      result["passed"] = failed == 0;
      result["skipped"] = Json::array();
      for (const auto& [k, n] : skipped) result["skipped"].push_back({{"k", k}, {"n", n}});
      result["reports"] = Json::array();
      for (const auto& r : reports) result["reports"].push_back(report_json(r));
      if (!p.no_timing) result["elapsed_ms"] = ms;
      out << envelope({{"command", "verify-range"},
                       {"max_k", p.max_k},
                       {"max_n", p.max_n},
                       {"budget", p.budget}},
                      std::move(result))
                 .dump(2)
          << '\n';
    } else {
      for (const auto& r : reports) write_report_text(r, out);
      for (const auto& [k, n] : skipped) {
        out << "k=" << k << " n=" << n << ": SKIPPED over budget\n";
      }
      out << "pairs_verified=" << reports.size() << " pairs_failed=" << failed
          << " pairs_skipped=" << skipped.size() << ' ' << (failed == 0 ? "PASS" : "FAIL")
          << '\n';
      if (!p.no_timing) out << "elapsed_ms=" << ms << '\n';
    }
    status = failed == 0 ? kOk : kMismatch;
  });

  try {
    // CLI11 consumes the vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    // --help and friends.
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}

}  // namespace ballseq::cli
