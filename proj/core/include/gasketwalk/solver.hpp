#pragma once

#include <cstdint>
#include <vector>

#include "gasketwalk/formulas.hpp"
#include "gasketwalk/graph.hpp"
#include "gasketwalk/rational.hpp"
#include "gasketwalk/variant.hpp"

namespace gasketwalk {

/// Exact mode runs rational Gaussian elimination on a dense system; entries
/// grow, so keep it to 3^6 = 729 states.
inline constexpr int kMaxExactDisks = 6;

/// Float mode is matrix-free Gauss-Seidel, memory-bound only; sweeps to
/// converge grow roughly like the absorption time, so larger n mostly buys
/// SolveFailure at tight tolerances.
inline constexpr int kMaxFloatDisks = 12;

struct Float64Options {
  /// Convergence: max fixed-point residual |x(v) - (b(v)+Σx(u))/deg(v)| below this.
  double tolerance = 1e-12;
  std::uint64_t max_sweeps = 10'000'000;
};

/// Low-level kernel shared by everything below: the discrete Dirichlet
/// problem for the graph Laplacian.  Solves
///
///   deg(v)·x(v) − Σ_{u ∈ adj(v), u ∉ X} x(u) = b(v)
///
/// for every vertex v outside the excluded set X, with x ≡ 0 on X.  Exact
/// mode shares one elimination across all right-hand sides; float mode runs
/// Gauss-Seidel sweeps in state-code order until the max fixed-point
/// residual drops below the tolerance (SolveFailure at the sweep cap).
/// Returned vectors are full length with zeros at excluded vertices.
std::vector<std::vector<Rational>> solve_dirichlet_exact(
    const StateGraph& g, const std::vector<char>& excluded,
    const std::vector<std::vector<Rational>>& rhs);
std::vector<double> solve_dirichlet_f64(const StateGraph& g, const std::vector<char>& excluded,
                                        const std::vector<double>& b,
                                        const Float64Options& opt = {});

/// Expected steps of the uniform random walk from each state until the first
/// visit to `targets`; result is indexed by state code, zero on targets.
/// h(v) = 1 + (1/deg v)·Σ_{u∈adj(v)} h(u) off the targets.
std::vector<Rational> hitting_times_exact(const StateGraph& g,
                                          const std::vector<std::uint32_t>& targets);
std::vector<double> hitting_times_f64(const StateGraph& g,
                                      const std::vector<std::uint32_t>& targets,
                                      const Float64Options& opt = {});

/// Probability of being absorbed at absorbing[i] from each state, walking
/// until the first visit to the absorbing set.  result[i] is indexed by state
/// code; at absorbing states it is the indicator of absorbing[i] itself, and
/// each column family sums to 1 pointwise.
std::vector<std::vector<Rational>> absorption_probabilities_exact(
    const StateGraph& g, const std::vector<std::uint32_t>& absorbing);
std::vector<std::vector<double>> absorption_probabilities_f64(
    const StateGraph& g, const std::vector<std::uint32_t>& absorbing,
    const Float64Options& opt = {});

/// Expected move count of the variant computed from the state graph alone
/// (no closed forms): hitting times to the variant's target set, averaged
/// over its start distribution.  OneToAny conditions on the first move:
/// E = 1 + (h(u1)+h(u2))/2 over the start corner's two neighbors.
Rational solve_variant_exact(int n, PuzzleVariant v);
double solve_variant_f64(int n, PuzzleVariant v, const Float64Options& opt = {});

struct PQValuesF64 {
  double p1, p2, q1, q2, q3;
};

/// First-principles p/q probabilities from absorption at the three corners:
/// p-values seen from the peg-1 corner after one forced move, q-values from
/// the half state.  p1/q1 answer for the peg-1 corner, p2 for peg 2 (= peg 3
/// by symmetry), q2 for peg 2, q3 for peg 3.
PQValues pq_values_exact(int n);
PQValuesF64 pq_values_f64(int n, const Float64Options& opt = {});

}  // namespace gasketwalk
