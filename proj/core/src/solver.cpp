#include "gasketwalk/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gasketwalk {

namespace {

std::vector<char> exclusion_mask(const StateGraph& g, const std::vector<std::uint32_t>& codes,
                                 const char* what) {
  if (codes.empty()) throw std::invalid_argument(std::string(what) + ": empty state set");
  std::vector<char> mask(g.vertex_count(), 0);
  for (std::uint32_t c : codes) {
    if (c >= g.vertex_count()) throw std::invalid_argument(std::string(what) + ": code out of range");
    mask[c] = 1;
  }
  return mask;
}

}  // namespace

// Dense Gaussian elimination over the rationals with partial pivoting, one
// elimination shared across all right-hand sides.
std::vector<std::vector<Rational>> solve_dirichlet_exact(
    const StateGraph& g, const std::vector<char>& excluded,
    const std::vector<std::vector<Rational>>& rhs) {
  const std::uint32_t nv = g.vertex_count();
  std::vector<std::uint32_t> index(nv, UINT32_MAX), vertex;
  for (std::uint32_t v = 0; v < nv; ++v) {
    if (!excluded[v]) {
      index[v] = static_cast<std::uint32_t>(vertex.size());
      vertex.push_back(v);
    }
  }
  const std::size_t n = vertex.size();
  const std::size_t nrhs = rhs.size();

  std::vector<std::vector<Rational>> out(nrhs, std::vector<Rational>(nv, Rational(0)));
  if (n == 0) return out;

  std::vector<Rational> a(n * n, Rational(0));
  std::vector<std::vector<Rational>> b(nrhs, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t v = vertex[i];
    a[i * n + i] = g.degree(v);
    for (std::uint32_t u : g.neighbors(v)) {
      if (!excluded[u]) a[i * n + index[u]] -= 1;
    }
    for (std::size_t r = 0; r < nrhs; ++r) b[r][i] = rhs[r][v];
  }

  // Forward elimination; `row` is the pivoting permutation.
  std::vector<std::size_t> row(n);
  for (std::size_t i = 0; i < n; ++i) row[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (abs(a[row[i] * n + k]) > abs(a[row[best] * n + k])) best = i;
    }
    std::swap(row[k], row[best]);
    const Rational& pivot = a[row[k] * n + k];
    if (pivot == 0) throw SolveFailure("singular hitting-time system");
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational& lead = a[row[i] * n + k];
      if (lead == 0) continue;
      const Rational f = lead / pivot;
      lead = 0;
      for (std::size_t j = k + 1; j < n; ++j) {
        const Rational& akj = a[row[k] * n + j];
        if (akj != 0) a[row[i] * n + j] -= f * akj;
      }
      for (std::size_t r = 0; r < nrhs; ++r) {
        if (b[r][row[k]] != 0) b[r][row[i]] -= f * b[r][row[k]];
      }
    }
  }

  for (std::size_t r = 0; r < nrhs; ++r) {
    std::vector<Rational> x(n);
    for (std::size_t k = n; k-- > 0;) {
      Rational acc = b[r][row[k]];
      for (std::size_t j = k + 1; j < n; ++j) {
        const Rational& akj = a[row[k] * n + j];
        if (akj != 0) acc -= akj * x[j];
      }
      x[k] = acc / a[row[k] * n + k];
    }
    for (std::size_t i = 0; i < n; ++i) out[r][vertex[i]] = x[i];
  }
  return out;
}

// Same system in floating point: in-place Gauss-Seidel sweeps in state-code
// order.  The iterate is held in long double because the convergence test is
// an absolute residual; in plain double the attainable floor is eps·|x|,
// which at n = 6 (hitting times ~2e4) already exceeds the default 1e-12.
std::vector<double> solve_dirichlet_f64(const StateGraph& g, const std::vector<char>& excluded,
                                        const std::vector<double>& b, const Float64Options& opt) {
  if (!(opt.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  const std::uint32_t nv = g.vertex_count();
  std::vector<long double> x(nv, 0.0L);

  const auto sweep = [&]() {
    for (std::uint32_t v = 0; v < nv; ++v) {
      if (excluded[v]) continue;
      long double acc = b[v];
      for (std::uint32_t u : g.neighbors(v)) {
        if (!excluded[u]) acc += x[u];
      }
      x[v] = acc / g.degree(v);
    }
  };
  const auto max_residual = [&]() {
    long double worst = 0.0L;
    for (std::uint32_t v = 0; v < nv; ++v) {
      if (excluded[v]) continue;
      long double acc = b[v];
      for (std::uint32_t u : g.neighbors(v)) {
        if (!excluded[u]) acc += x[u];
      }
      const long double r = x[v] - acc / g.degree(v);
      worst = std::max(worst, r < 0 ? -r : r);
    }
    return worst;
  };

  // Residual checks cost one extra pass, so amortize them over 8 sweeps.
  long double res = 0.0L;
  for (std::uint64_t done = 0; done < opt.max_sweeps;) {
    const std::uint64_t burst = std::min<std::uint64_t>(8, opt.max_sweeps - done);
    for (std::uint64_t s = 0; s < burst; ++s) sweep();
    done += burst;
    res = max_residual();
    if (res < opt.tolerance) return std::vector<double>(x.begin(), x.end());
  }
  std::ostringstream msg;
  msg << "Gauss-Seidel did not reach tolerance " << opt.tolerance << " within " << opt.max_sweeps
      << " sweeps (residual " << static_cast<double>(res) << ")";
  throw SolveFailure(msg.str());
}

namespace {

std::vector<Rational> degree_rhs(const StateGraph& g, const std::vector<char>& excluded) {
  std::vector<Rational> b(g.vertex_count(), Rational(0));
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (!excluded[v]) b[v] = g.degree(v);
  }
  return b;
}

// b(v) = number of edges from v into the absorbing vertex `a`.
std::vector<Rational> boundary_rhs(const StateGraph& g, const std::vector<char>& excluded,
                                   std::uint32_t a) {
  std::vector<Rational> b(g.vertex_count(), Rational(0));
  for (std::uint32_t u : g.neighbors(a)) {
    if (!excluded[u]) b[u] += 1;
  }
  return b;
}

StateGraph graph_for_mode(int n, int cap, const char* mode) {
  if (n < 1) throw TooLarge("disk count must be positive");
  if (n > cap)
    throw TooLarge(std::string(mode) + " solves are limited to n <= " + std::to_string(cap));
  return build_graph(n);
}

std::vector<std::uint32_t> corner_codes(int n) {
  return {static_cast<std::uint32_t>(corner_code(n, kPeg1)),
          static_cast<std::uint32_t>(corner_code(n, kPeg2)),
          static_cast<std::uint32_t>(corner_code(n, kPeg3))};
}

}  // namespace

std::vector<Rational> hitting_times_exact(const StateGraph& g,
                                          const std::vector<std::uint32_t>& targets) {
  const auto excluded = exclusion_mask(g, targets, "hitting_times");
  auto sols = solve_dirichlet_exact(g, excluded, {degree_rhs(g, excluded)});
  return std::move(sols.front());
}

std::vector<double> hitting_times_f64(const StateGraph& g,
                                      const std::vector<std::uint32_t>& targets,
                                      const Float64Options& opt) {
  const auto excluded = exclusion_mask(g, targets, "hitting_times");
  std::vector<double> b(g.vertex_count(), 0.0);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (!excluded[v]) b[v] = g.degree(v);
  }
  return solve_dirichlet_f64(g, excluded, b, opt);
}

std::vector<std::vector<Rational>> absorption_probabilities_exact(
    const StateGraph& g, const std::vector<std::uint32_t>& absorbing) {
  const auto excluded = exclusion_mask(g, absorbing, "absorption_probabilities");
  std::vector<std::vector<Rational>> rhs;
  rhs.reserve(absorbing.size());
  for (std::uint32_t a : absorbing) rhs.push_back(boundary_rhs(g, excluded, a));
  auto sols = solve_dirichlet_exact(g, excluded, rhs);
  for (std::size_t i = 0; i < absorbing.size(); ++i) sols[i][absorbing[i]] = 1;
  return sols;
}

std::vector<std::vector<double>> absorption_probabilities_f64(
    const StateGraph& g, const std::vector<std::uint32_t>& absorbing, const Float64Options& opt) {
  const auto excluded = exclusion_mask(g, absorbing, "absorption_probabilities");
  std::vector<std::vector<double>> out;
  out.reserve(absorbing.size());
  for (std::uint32_t a : absorbing) {
    std::vector<double> b(g.vertex_count(), 0.0);
    for (std::uint32_t u : g.neighbors(a)) {
      if (!excluded[u]) b[u] += 1.0;
    }
    out.push_back(solve_dirichlet_f64(g, excluded, b, opt));
    out.back()[a] = 1.0;
  }
  return out;
}

namespace {

// The start-distribution averaging shared by both numeric modes.  `h` is the
// hitting-time vector to the variant's target set.
template <typename Num, typename Vec>
Num finish_variant(const StateGraph& g, PuzzleVariant v, const Vec& h) {
  const int n = g.disk_count();
  switch (v) {
    case PuzzleVariant::OneToThree:
      return h[corner_code(n, kPeg1)];
    case PuzzleVariant::HalfToAny:
      return h[half_code(n)];
    case PuzzleVariant::OneToAny: {
      // First-step conditioning: one forced move from the start corner, then
      // hit any corner (possibly the start itself).
      const auto nb = g.neighbors(static_cast<std::uint32_t>(corner_code(n, kPeg1)));
      Num acc = Num(1);
      acc += (Num(h[nb[0]]) + Num(h[nb[1]])) / 2;
      return acc;
    }
    case PuzzleVariant::RandomToAny:
    case PuzzleVariant::RandomToOne: {
      Num acc = Num(0);
      for (std::uint32_t s = 0; s < g.vertex_count(); ++s) acc += h[s];
      return acc / Num(static_cast<long>(g.vertex_count()));
    }
  }
  throw std::invalid_argument("bad variant");
}

std::vector<std::uint32_t> variant_targets(int n, PuzzleVariant v) {
  switch (v) {
    case PuzzleVariant::OneToThree:
      return {static_cast<std::uint32_t>(corner_code(n, kPeg3))};
    case PuzzleVariant::RandomToOne:
      return {static_cast<std::uint32_t>(corner_code(n, kPeg1))};
    default:
      return corner_codes(n);
  }
}

}  // namespace

Rational solve_variant_exact(int n, PuzzleVariant v) {
  const StateGraph g = graph_for_mode(n, kMaxExactDisks, "exact");
  const auto h = hitting_times_exact(g, variant_targets(n, v));
  return finish_variant<Rational>(g, v, h);
}

double solve_variant_f64(int n, PuzzleVariant v, const Float64Options& opt) {
  const StateGraph g = graph_for_mode(n, kMaxFloatDisks, "float64");
  const auto h = hitting_times_f64(g, variant_targets(n, v), opt);
  return finish_variant<double>(g, v, h);
}

namespace {

// p-values: both minimal moves from the peg-1 corner are equally likely, so
// condition on them and average the absorption probabilities.  q-values read
// directly at the half state.
template <typename Num, typename PQ>
PQ finish_pq(const StateGraph& g, const std::vector<std::vector<Num>>& phi) {
  const int n = g.disk_count();
  const auto nb = g.neighbors(static_cast<std::uint32_t>(corner_code(n, kPeg1)));
  const std::uint64_t half = half_code(n);
  PQ out;
  out.p1 = (Num(phi[0][nb[0]]) + Num(phi[0][nb[1]])) / 2;
  out.p2 = (Num(phi[1][nb[0]]) + Num(phi[1][nb[1]])) / 2;
  out.q1 = phi[0][half];
  out.q2 = phi[1][half];
  out.q3 = phi[2][half];
  return out;
}

}  // namespace

PQValues pq_values_exact(int n) {
  const StateGraph g = graph_for_mode(n, kMaxExactDisks, "exact");
  const auto phi = absorption_probabilities_exact(g, corner_codes(n));
  return finish_pq<Rational, PQValues>(g, phi);
}

PQValuesF64 pq_values_f64(int n, const Float64Options& opt) {
  const StateGraph g = graph_for_mode(n, kMaxFloatDisks, "float64");
  const auto phi = absorption_probabilities_f64(g, corner_codes(n), opt);
  return finish_pq<double, PQValuesF64>(g, phi);
}

}  // namespace gasketwalk
