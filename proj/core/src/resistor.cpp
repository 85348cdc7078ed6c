#include "gasketwalk/resistor.hpp"

#include <stdexcept>

#include "gasketwalk/formulas.hpp"

namespace gasketwalk {

WyeArms delta_to_wye(const DeltaEdges& d) {
  if (d.r_ab <= 0 || d.r_ac <= 0 || d.r_bc <= 0) {
    throw NonPositiveResistance("delta edges must be positive");
  }
  const Rational s = d.r_ab + d.r_ac + d.r_bc;
  WyeArms w;
  w.r_a = d.r_ab * d.r_ac / s;
  w.r_b = d.r_ab * d.r_bc / s;
  w.r_c = d.r_ac * d.r_bc / s;
  return w;
}

WyeResistance reduce_gasket(int n) {
  if (n < 1) throw std::invalid_argument("reduce_gasket: n must be >= 1");
  Rational r(1, 3);
  for (int k = 1; k < n; ++k) {
    r = (Rational(5) * r + 1) / 3;
  }
  return WyeResistance{n, r};
}

Rational corner_resistance(int n) { return Rational(2) * reduce_gasket(n).R; }

Rational commute_time(int n) {
  return Rational(2) * Rational(edge_count_closed(n)) * corner_resistance(n);
}

Rational one_way_time(int n) { return commute_time(n) / 2; }

double effective_resistance_oracle(const StateGraph& g, std::uint32_t u, std::uint32_t v,
                                   const Float64Options& opt) {
  if (g.disk_count() > kMaxExactDisks) {
    throw TooLarge("resistance oracle is limited to n <= " + std::to_string(kMaxExactDisks));
  }
  if (u == v) throw std::invalid_argument("resistance oracle needs distinct terminals");
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw std::invalid_argument("terminal code out of range");
  }
  // Ground v, push one unit of current into u; the potential at u is then the
  // effective resistance.
  std::vector<char> excluded(g.vertex_count(), 0);
  excluded[v] = 1;
  std::vector<double> b(g.vertex_count(), 0.0);
  b[u] = 1.0;
  return solve_dirichlet_f64(g, excluded, b, opt)[u];
}

}  // namespace gasketwalk
