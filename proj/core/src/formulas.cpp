#include "gasketwalk/formulas.hpp"

#include <stdexcept>

namespace gasketwalk {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Rational e_random_to_any(int n) {
  require(n >= 0, "e_random_to_any: n must be >= 0");
  return make_rational(pow5(n) - 2 * pow3(n) + 1, BigInt(4));
}

Rational e_one_to_three(int n) {
  require(n >= 1, "e_one_to_three: n must be >= 1");
  return make_rational((pow3(n) - 1) * (pow5(n) - pow3(n)), 2 * pow3(n - 1));
}

Rational e_one_to_any(int n) {
  require(n >= 1, "e_one_to_any: n must be >= 1");
  return make_rational(pow3(n) - 1, BigInt(2));
}

Rational e_half_to_any(int n) {
  require(n >= 1, "e_half_to_any: n must be >= 1");
  return make_rational(3 * (pow5(n - 1) - pow3(n - 1)), BigInt(2));
}

Rational e_random_to_one(int n) {
  require(n >= 1, "e_random_to_one: n must be >= 1");
  return make_rational(pow5(n + 1) - 2 * pow3(n + 1) + 5, BigInt(4)) -
         make_rational(pow5(n), pow3(n));
}

Rational e_random_to_one_single_fraction(int n) {
  require(n >= 1, "e_random_to_one_single_fraction: n must be >= 1");
  const BigInt num = (pow3(n) - 1) * (pow5(n + 1) - 2 * pow3(n + 1)) + pow5(n) - pow3(n);
  return make_rational(num, 4 * pow3(n));
}

Rational closed_form(PuzzleVariant v, int n) {
  switch (v) {
    case PuzzleVariant::RandomToAny: return e_random_to_any(n);
    case PuzzleVariant::OneToThree: return e_one_to_three(n);
    case PuzzleVariant::OneToAny: return e_one_to_any(n);
    case PuzzleVariant::HalfToAny: return e_half_to_any(n);
    case PuzzleVariant::RandomToOne: return e_random_to_one(n);
  }
  throw std::invalid_argument("closed_form: bad variant");
}

Rational q1_closed(int n) {
  require(n >= 1, "q1_closed: n must be >= 1");
  return make_rational(pow5(n - 1) - pow3(n - 1), pow5(n) - pow3(n));
}

Rational q1_recurrence(int n) {
  require(n >= 1, "q1_recurrence: n must be >= 1");
  Rational q = make_rational(0);  // q1(1)
  for (int k = 2; k <= n; ++k) {
    q = Rational(1) / (Rational(8) - Rational(15) * q);
  }
  return q;
}

PQValues pq_closed(int n) {
  require(n >= 1, "pq_closed: n must be >= 1");
  PQValues v;
  v.q1 = q1_closed(n);
  v.q2 = make_rational(2 * pow5(n - 1), pow5(n) - pow3(n));
  v.q3 = Rational(2) * v.q1;
  v.p1 = Rational(5) * v.q1;
  v.p2 = (Rational(1) - v.p1) / 2;
  return v;
}

Rational wye_resistance_closed(int n) {
  require(n >= 1, "wye_resistance_closed: n must be >= 1");
  return make_rational(pow5(n) - pow3(n), 2 * pow3(n));
}

BigInt edge_count_closed(int n) {
  require(n >= 1, "edge_count_closed: n must be >= 1");
  return 3 * (pow3(n) - 1) / 2;
}

BigInt min_moves(int n) {
  require(n >= 0, "min_moves: n must be >= 0");
  return pow2(n) - 1;
}

std::vector<IdentityCheck> check_identities(int n) {
  require(n >= 2, "check_identities: n must be >= 2");

  const PQValues cur = pq_closed(n);
  const PQValues prev = pq_closed(n - 1);
  const Rational e1a = e_one_to_any(n), e1a_prev = e_one_to_any(n - 1);
  const Rational eha = e_half_to_any(n);
  const Rational era = e_random_to_any(n), era_prev = e_random_to_any(n - 1);
  const Rational e13 = e_one_to_three(n);
  const Rational er1 = e_random_to_one(n);
  const Rational half(1, 2), quarter(1, 4), three_quarters(3, 4);

  std::vector<IdentityCheck> out;
  auto check = [&out](std::string name, const Rational& lhs, const Rational& rhs) {
    IdentityCheck c;
    c.name = std::move(name);
    c.holds = (lhs == rhs);
    if (!c.holds) c.detail = to_string(lhs) + " != " + to_string(rhs);
    out.push_back(std::move(c));
  };

  // One level of the conditioning argument: reach a tower with the n-1 small
  // disks first, then finish (or not) depending on where they landed.
  check("one-to-any recursion", e1a, e1a_prev + 2 * prev.p2 * eha);
  check("p1 recursion", cur.p1, prev.p1 + 2 * prev.p2 * cur.q2);
  check("p2 recursion", cur.p2, prev.p2 * cur.q1 + prev.p2 * cur.q3);
  check("half-to-any decomposition", eha,
        half + e1a_prev + (prev.p1 + prev.p2) * eha);
  check("q1 recursion", cur.q1, prev.p1 * cur.q1 + prev.p2 * cur.q3);
  check("q2 recursion", cur.q2,
        three_quarters * (prev.p2 + (prev.p1 + prev.p2) * cur.q2) +
            quarter * (prev.p1 * cur.q3 + prev.p2 * cur.q1));
  check("q3 recursion", cur.q3,
        three_quarters * (prev.p1 * cur.q3 + prev.p2 * cur.q1) +
            quarter * ((prev.p1 + prev.p2) * cur.q2 + prev.p2));
  check("random-start recursion", era, era_prev + Rational(2, 3) * eha);
  check("tower renewal", e13, e1a / cur.p2);
  check("half-to-any via p2", eha, make_rational(pow3(n - 1), BigInt(2)) / prev.p2);
  check("random-to-one split", er1, era + Rational(2, 3) * e13);
  return out;
}

}  // namespace gasketwalk
