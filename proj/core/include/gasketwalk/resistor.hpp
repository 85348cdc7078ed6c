#pragma once

#include <cstdint>

#include "gasketwalk/graph.hpp"
#include "gasketwalk/rational.hpp"
#include "gasketwalk/solver.hpp"

namespace gasketwalk {

/// A triangle of resistances between terminals A, B, C.
struct DeltaEdges {
  Rational r_ab, r_ac, r_bc;
};

/// A star with arms from terminals A, B, C to a common center.
struct WyeArms {
  Rational r_a, r_b, r_c;
};

/// The level-n gasket collapsed to a symmetric wye; R is the common arm.
struct WyeResistance {
  int n;
  Rational R;
};

/// Exact delta-to-wye transform: r_a = r_AB·r_AC/S etc. with S the edge sum.
/// Preserves all three pairwise two-terminal resistances.
WyeArms delta_to_wye(const DeltaEdges& d);

/// Collapses the level-n state graph with unit edge resistances to its
/// equivalent wye by the level-by-level recurrence R(k+1) = (5·R(k) + 1)/3
/// starting from R(1) = 1/3.
WyeResistance reduce_gasket(int n);

/// Corner-to-corner effective resistance, two wye arms in series: 2·R(n).
Rational corner_resistance(int n);

/// Expected round-trip time of the random walk between two corners: twice
/// the edge count times the effective resistance between them.
Rational commute_time(int n);

/// Half the commute time; between corners the two directions cost the same
/// by symmetry, so this is the one-way expected hitting time.
Rational one_way_time(int n);

/// Numeric effective resistance straight from the explicit graph: unit
/// current in at u and out at v, potential grounded at v, solved with the
/// same Gauss-Seidel machinery as the float solver.  Independent of the
/// recurrence route.  Requires u != v and n <= kMaxExactDisks.
double effective_resistance_oracle(const StateGraph& g, std::uint32_t u, std::uint32_t v,
                                   const Float64Options& opt = {});

}  // namespace gasketwalk
