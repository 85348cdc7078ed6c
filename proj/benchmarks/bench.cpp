// Microbenchmarks for the hot paths: graph construction, both solver modes,
// and raw simulation throughput.  Sizes stop where a single iteration would
// dominate the suite; the README notes measured costs beyond these.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <utility>

#include "gasketwalk/formulas.hpp"
#include "gasketwalk/graph.hpp"
#include "gasketwalk/simulate.hpp"
#include "gasketwalk/solver.hpp"

namespace gw = gasketwalk;

namespace {

void BM_BuildGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    gw::StateGraph g = gw::build_graph(n);
    benchmark::DoNotOptimize(g.edge_count());
  }
  state.counters["states"] = static_cast<double>(gw::build_graph(n).vertex_count());
}
BENCHMARK(BM_BuildGraph)->Arg(6)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SolveExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    gw::Rational e = gw::solve_variant_exact(n, gw::PuzzleVariant::OneToThree);
    // as_const selects the read-only DoNotOptimize overload; the read-write
    // one in benchmark 1.6 miscompiles under GCC and clobbers the operand.
    benchmark::DoNotOptimize(std::as_const(e));
  }
}
BENCHMARK(BM_SolveExact)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SolveF64(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double e = gw::solve_variant_f64(n, gw::PuzzleVariant::OneToThree);
    benchmark::DoNotOptimize(std::as_const(e));
  }
}
BENCHMARK(BM_SolveF64)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gw::SimConfig cfg;
  cfg.n = n;
  cfg.variant = gw::PuzzleVariant::OneToThree;
  cfg.trials = 2000;
  cfg.master_seed = 7;
  std::uint64_t total_steps = 0;
  for (auto _ : state) {
    gw::SimStats s = gw::simulate(cfg);
    total_steps += static_cast<std::uint64_t>(s.mean * static_cast<double>(s.trials));
    benchmark::DoNotOptimize(std::as_const(s));
  }
  state.counters["steps/s"] =
      benchmark::Counter(static_cast<double>(total_steps), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_Simulate)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
