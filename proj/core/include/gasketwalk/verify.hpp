#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gasketwalk {

struct VerifyOptions {
  /// Cap for the solver-backed checks (formula vs exact solver, p/q values,
  /// resistance oracle, Monte Carlo); clamped to each check's own limit.
  /// Formula-only checks always run over their full documented ranges.
  int n_max = 5;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::string fixture_dir;  ///< empty: default lookup
};

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;  ///< failure cause, or a short statistic on success
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

/// Runs every cross-check that ties the independent routes together:
/// closed forms vs the exact solver, the identity battery, the electrical
/// reduction vs formulas and vs the numeric Laplacian oracle, Monte Carlo
/// z-scores against exact values, and the sequence fixtures.
VerifyReport run_verification(const VerifyOptions& opt = {});

/// One "[ ok ]"/"[FAIL]" line per check plus a summary line.
void print_report(const VerifyReport& r, std::ostream& os);

}  // namespace gasketwalk
