#pragma once

#include <cstdint>
#include <vector>

#include "gasketwalk/rng.hpp"
#include "gasketwalk/state.hpp"
#include "gasketwalk/variant.hpp"

namespace gasketwalk {

/// Simulation walks on peg stacks directly (no explicit graph), so the only
/// ceiling is the state-code width used for uniform start sampling.
inline constexpr int kMaxSimDisks = kMaxCodeDisks;

struct SimConfig {
  int n = 1;
  PuzzleVariant variant = PuzzleVariant::OneToThree;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  std::uint64_t max_steps = 1'000'000'000;  ///< trials hitting this are censored
  unsigned workers = 1;                     ///< never affects the results, only wall time
  bool checked = false;  ///< re-validate every step against the state layer (slow)
};

struct SimStats {
  std::uint64_t trials = 0;
  double mean = 0.0;
  double variance = 0.0;  ///< unbiased sample variance
  double stddev = 0.0;
  double cv = 0.0;  ///< stddev/mean; 0 when the mean is 0
  double ci95_halfwidth = 0.0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::uint64_t censored = 0;
};

struct TrialResult {
  std::uint64_t steps;
  bool censored;
};

/// One random-move walk under the variant's start/stop rule, counting moves
/// until the stop rule fires; truncated (censored) at max_steps.  RandomTo*
/// variants first draw the start uniformly from all 3^n states out of `rng`.
TrialResult run_trial(int n, PuzzleVariant variant, SplitMix64& rng,
                      std::uint64_t max_steps = 1'000'000'000, bool checked = false);

/// Runs cfg.trials independent trials, trial i on its own stream seeded
/// trial_seed(master_seed, i), and aggregates with exact integer sums, so
/// stats are bit-identical for any worker count.
SimStats simulate(const SimConfig& cfg);

/// Same, also recording each trial's step count (indexed by trial).
SimStats simulate_collect(const SimConfig& cfg, std::vector<std::uint64_t>& steps_out);

struct CvEstimate {
  bool applicable = false;  ///< false iff the sample mean is 0
  double cv = 0.0;
  double ci_lo = 0.0;  ///< bootstrap percentile 95% interval
  double ci_hi = 0.0;
  std::uint64_t resamples = 0;
};

/// Sample coefficient of variation with a seeded bootstrap percentile
/// interval.  There is no external ground truth for this number; it is an
/// empirical probe only.  Requires trials >= 1000.
CvEstimate estimate_cv(const SimConfig& cfg, std::uint64_t resamples = 1000);

}  // namespace gasketwalk
