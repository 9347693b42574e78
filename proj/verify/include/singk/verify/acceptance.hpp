#pragma once

// The numbered acceptance criteria, runnable from tests and from the CLI.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace singk::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  std::optional<double> time_limit;
  std::string detail;
};

/// Entry point of the command-line front end: run(args, out, err) -> exit code.
using CliRunner = std::function<int(const std::vector<std::string>&, std::ostream&, std::ostream&)>;

struct AcceptanceOptions {
  std::uint64_t seed = 20261016;
  /// When set, criteria phrased in terms of CLI commands go through it.
  CliRunner cli;
  /// Restrict to these ids; empty means all.
  std::vector<int> only;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "PASS  [1] ADE golden table  0.42 s (limit 60 s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace singk::verify
