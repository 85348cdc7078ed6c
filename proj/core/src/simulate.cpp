#include "gasketwalk/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>

#include "gasketwalk/errors.hpp"

namespace gasketwalk {

namespace {

// Mutable peg stacks for the walker; disks are int8 (n <= 40), stacks grow
// bottom to top so back() is the movable disk.
struct Pegs {
  std::vector<std::int8_t> stack[3];

  void clear() {
    for (auto& s : stack) s.clear();
  }
  int top(int p) const { return stack[p].empty() ? 0 : stack[p].back(); }
  bool tower_on(int p, int n) const { return static_cast<int>(stack[p].size()) == n; }
  bool any_tower(int n) const { return tower_on(0, n) || tower_on(1, n) || tower_on(2, n); }

  void load_code(int n, std::uint64_t code) {
    clear();
    // Largest disk first keeps every stack legally ordered while loading.
    for (int k = n; k >= 1; --k) {
      std::uint64_t c = code;
      for (int i = 1; i < k; ++i) c /= 3;
      stack[c % 3].push_back(static_cast<std::int8_t>(k));
    }
  }
};

struct Candidate {
  int from, to;
};

// Legal (from, to) pairs in lexicographic order; always 2 or 3 of them.
int enumerate(const Pegs& pegs, Candidate out[3]) {
  int count = 0;
  for (int from = 0; from < 3; ++from) {
    const int moving = pegs.top(from);
    if (moving == 0) continue;
    for (int to = 0; to < 3; ++to) {
      if (to == from) continue;
      const int resting = pegs.top(to);
      if (resting == 0 || resting > moving) out[count++] = {from, to};
    }
  }
  return count;
}

// Checked mode: mirrors the walk through the validated state layer and
// cross-examines the walker's move enumeration at every step.
struct CheckedMirror {
  HanoiState state;

  explicit CheckedMirror(const Pegs& pegs, int n) : state(rebuild(pegs, n)) {}

  static HanoiState rebuild(const Pegs& pegs, int n) {
    std::vector<Peg> of_disk(static_cast<std::size_t>(n), kPeg1);
    for (int p = 0; p < 3; ++p) {
      for (std::int8_t d : pegs.stack[p]) of_disk[static_cast<std::size_t>(d - 1)] = Peg(p + 1);
    }
    return HanoiState::from_pegs(of_disk);
  }

  void step(const Pegs& pegs, const Candidate cand[3], int count, int picked) {
    const auto moves = legal_moves(state);
    if (static_cast<int>(moves.size()) != count)
      throw IllegalMove("checked mode: move count mismatch");
    for (int i = 0; i < count; ++i) {
      if (moves[i].from.index() != cand[i].from + 1 || moves[i].to.index() != cand[i].to + 1 ||
          moves[i].disk != pegs.top(cand[i].from))
        throw IllegalMove("checked mode: move enumeration mismatch");
    }
    state = apply_move(state, moves[picked]);
  }
};

}  // namespace

TrialResult run_trial(int n, PuzzleVariant variant, SplitMix64& rng, std::uint64_t max_steps,
                      bool checked) {
  if (n < 1 || n > kMaxSimDisks)
    throw TooLarge("simulation is limited to n <= " + std::to_string(kMaxSimDisks));
  if (max_steps < 1) throw std::invalid_argument("max_steps must be positive");

  Pegs pegs;
  switch (variant) {
    case PuzzleVariant::OneToThree:
    case PuzzleVariant::OneToAny:
      pegs.load_code(n, 0);
      break;
    case PuzzleVariant::HalfToAny:
      pegs.load_code(n, pow3_u64(n - 1));
      break;
    case PuzzleVariant::RandomToAny:
    case PuzzleVariant::RandomToOne:
      pegs.load_code(n, rng.bounded(pow3_u64(n)));
      break;
  }

  const auto stopped = [&]() {
    switch (variant) {
      case PuzzleVariant::OneToThree: return pegs.tower_on(2, n);
      case PuzzleVariant::RandomToOne: return pegs.tower_on(0, n);
      default: return pegs.any_tower(n);
    }
  };

  // OneToAny's start is itself a tower; its stop rule only arms after the
  // first move.
  if (variant != PuzzleVariant::OneToAny && stopped()) return {0, false};

  std::optional<CheckedMirror> mirror;
  if (checked) mirror.emplace(pegs, n);

  Candidate cand[3];
  for (std::uint64_t steps = 1; steps <= max_steps; ++steps) {
    const int count = enumerate(pegs, cand);
    const int picked = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(count)));
    if (mirror) mirror->step(pegs, cand, count, picked);
    auto& from = pegs.stack[cand[picked].from];
    pegs.stack[cand[picked].to].push_back(from.back());
    from.pop_back();
    if (stopped()) return {steps, false};
  }
  return {max_steps, true};
}

namespace {

struct Accum {
  unsigned __int128 sum = 0;
  unsigned __int128 sum_sq = 0;
  std::uint64_t min = UINT64_MAX;
  std::uint64_t max = 0;
  std::uint64_t censored = 0;

  void add(const TrialResult& t) {
    sum += t.steps;
    sum_sq += static_cast<unsigned __int128>(t.steps) * t.steps;
    min = std::min(min, t.steps);
    max = std::max(max, t.steps);
    censored += t.censored ? 1 : 0;
  }
  void merge(const Accum& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    min = std::min(min, o.min);
    max = std::max(max, o.max);
    censored += o.censored;
  }
};

void validate(const SimConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxSimDisks)
    throw TooLarge("simulation is limited to n <= " + std::to_string(kMaxSimDisks));
  if (cfg.trials < 1) throw std::invalid_argument("trials must be positive");
  if (cfg.max_steps < 1) throw std::invalid_argument("max_steps must be positive");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be positive");
}

SimStats finalize(const Accum& acc, std::uint64_t trials) {
  SimStats st;
  st.trials = trials;
  st.min = acc.min;
  st.max = acc.max;
  st.censored = acc.censored;
  const long double s = static_cast<long double>(acc.sum);
  const long double ss = static_cast<long double>(acc.sum_sq);
  const long double t = static_cast<long double>(trials);
  const long double mean = s / t;
  long double var = 0.0L;
  if (trials > 1) var = std::max(0.0L, (ss - s * s / t) / (t - 1.0L));
  const long double sd = sqrtl(var);
  st.mean = static_cast<double>(mean);
  st.variance = static_cast<double>(var);
  st.stddev = static_cast<double>(sd);
  st.cv = mean > 0 ? static_cast<double>(sd / mean) : 0.0;
  st.ci95_halfwidth = static_cast<double>(1.96L * sd / sqrtl(t));
  return st;
}

SimStats run_sim(const SimConfig& cfg, std::vector<std::uint64_t>* steps_out) {
  validate(cfg);
  if (steps_out) steps_out->assign(cfg.trials, 0);

  const std::uint64_t workers = std::min<std::uint64_t>(cfg.workers, cfg.trials);
  std::vector<Accum> parts(workers);
  const auto worker = [&cfg, steps_out](std::uint64_t lo, std::uint64_t hi, Accum* acc) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      SplitMix64 rng(trial_seed(cfg.master_seed, i));
      const TrialResult t = run_trial(cfg.n, cfg.variant, rng, cfg.max_steps, cfg.checked);
      acc->add(t);
      if (steps_out) (*steps_out)[i] = t.steps;
    }
  };

  if (workers <= 1) {
    worker(0, cfg.trials, &parts[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = cfg.trials * w / workers;
      const std::uint64_t hi = cfg.trials * (w + 1) / workers;
      threads.emplace_back(worker, lo, hi, &parts[w]);
    }
    for (auto& th : threads) th.join();
  }

  Accum total;
  for (const Accum& p : parts) total.merge(p);
  return finalize(total, cfg.trials);
}

}  // namespace

SimStats simulate(const SimConfig& cfg) { return run_sim(cfg, nullptr); }

SimStats simulate_collect(const SimConfig& cfg, std::vector<std::uint64_t>& steps_out) {
  return run_sim(cfg, &steps_out);
}

CvEstimate estimate_cv(const SimConfig& cfg, std::uint64_t resamples) {
  if (cfg.trials < 1000) throw InsufficientTrials("estimate_cv needs at least 1000 trials");
  if (resamples < 1) throw std::invalid_argument("resamples must be positive");

  std::vector<std::uint64_t> steps;
  const SimStats stats = simulate_collect(cfg, steps);

  CvEstimate est;
  est.resamples = resamples;
  if (!(stats.mean > 0)) return est;  // all-zero sample: CV undefined
  est.applicable = true;
  est.cv = stats.cv;

  // Percentile bootstrap on its own stream, derived from (not equal to) the
  // master seed so it cannot collide with any trial stream.
  SplitMix64 boot(mix64(cfg.master_seed ^ 0x626f6f7473747261ull));
  const std::uint64_t t = steps.size();
  std::vector<double> cvs;
  cvs.reserve(resamples);
  for (std::uint64_t b = 0; b < resamples; ++b) {
    unsigned __int128 sum = 0, sum_sq = 0;
    for (std::uint64_t i = 0; i < t; ++i) {
      const std::uint64_t v = steps[boot.bounded(t)];
      sum += v;
      sum_sq += static_cast<unsigned __int128>(v) * v;
    }
    const long double s = static_cast<long double>(sum);
    const long double ss = static_cast<long double>(sum_sq);
    const long double mean = s / t;
    const long double var =
        t > 1 ? std::max(0.0L, (ss - s * s / t) / (static_cast<long double>(t) - 1.0L)) : 0.0L;
    cvs.push_back(mean > 0 ? static_cast<double>(sqrtl(var) / mean) : 0.0);
  }
  std::sort(cvs.begin(), cvs.end());
  const double last = static_cast<double>(resamples - 1);
  est.ci_lo = cvs[static_cast<std::size_t>(std::floor(0.025 * last))];
  est.ci_hi = cvs[static_cast<std::size_t>(std::ceil(0.975 * last))];
  return est;
}

}  // namespace gasketwalk
