#pragma once

#include <string>
#include <vector>

#include "gasketwalk/rational.hpp"
#include "gasketwalk/variant.hpp"

namespace gasketwalk {

/// Expected moves, uniform random start to the first perfect tower:
/// (5^n - 2*3^n + 1) / 4.  Defined for n >= 0.
Rational e_random_to_any(int n);

/// Expected moves, tower on peg 1 to tower on peg 3:
/// (3^n - 1)(5^n - 3^n) / (2*3^(n-1)).  Defined for n >= 1.
Rational e_one_to_three(int n);

/// Expected moves, tower on peg 1 to the first perfect tower after at least
/// one move: (3^n - 1) / 2.  Defined for n >= 1.
Rational e_one_to_any(int n);

/// Expected moves, tower on peg 2 to the first perfect tower:
/// (3/2)(5^(n-1) - 3^(n-1)).  Defined for n >= 1.
Rational e_half_to_any(int n);

/// Expected moves, uniform random start until the tower stands on peg 1:
/// (5^(n+1) - 2*3^(n+1) + 5)/4 - (5/3)^n.  Defined for n >= 1.
Rational e_random_to_one(int n);

/// Same quantity as a single fraction over 4*3^n; must agree with
/// e_random_to_one term by term.
Rational e_random_to_one_single_fraction(int n);

/// Dispatch to the closed form matching the variant.
Rational closed_form(PuzzleVariant v, int n);

/// Where the walk first assembles a perfect tower.  p-values start from the
/// tower on peg 1 (at least one move required); q-values start from the half
/// state, disks 1..n-1 on peg 1 and disk n on peg 2.
struct PQValues {
  Rational p1;  ///< tower start: finish on peg 1
  Rational p2;  ///< tower start: finish on peg 2 (= peg 3 by symmetry)
  Rational q1;  ///< half start: finish on peg 1
  Rational q2;  ///< half start: finish on peg 2
  Rational q3;  ///< half start: finish on peg 3 (= 2·q1 identically)
};

/// q1(n) = (5^(n-1) - 3^(n-1)) / (5^n - 3^n).  Defined for n >= 1.
Rational q1_closed(int n);

/// q1 via the recurrence q1(k) = 1 / (8 - 15*q1(k-1)) from q1(1) = 0.
Rational q1_recurrence(int n);

/// All five probabilities by closed form.  Defined for n >= 1.
PQValues pq_closed(int n);

/// Common arm resistance of the wye equivalent to the level-n gasket with
/// unit edges: R(n) = (5^n - 3^n) / (2*3^n).  Corner-to-corner is 2·R(n).
Rational wye_resistance_closed(int n);

/// Number of edges of the level-n graph: 3(3^n - 1)/2.
BigInt edge_count_closed(int n);

/// Classical minimum solution length, 2^n - 1.
BigInt min_moves(int n);

/// One consistency identity among the closed forms, evaluated exactly.
struct IdentityCheck {
  std::string name;
  bool holds;
  std::string detail;  ///< both sides, printed, when the check fails
};

/// Evaluates the full battery of interlocking identities at a given n >= 2:
/// probability normalizations, the q1 recurrence step, and the relations
/// tying the five expectations to each other and to the resistance.
std::vector<IdentityCheck> check_identities(int n);

}  // namespace gasketwalk
