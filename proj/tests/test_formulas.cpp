#include <string>
#include <vector>

#include "doctest.h"
#include "gasketwalk/formulas.hpp"
#include "gasketwalk/rational.hpp"
#include "gasketwalk/variant.hpp"

namespace gw = gasketwalk;

namespace {

gw::Rational rat(const std::string& s) { return gw::parse_rational(s); }

}  // namespace

TEST_CASE("initial values of the five expectations") {
  const std::vector<std::string> e_ra = {"0", "2", "18", "116", "660"};
  const std::vector<std::string> e_13 = {"2", "64/3", "1274/9", "21760/27"};
  const std::vector<std::string> e_1a = {"1", "4", "13", "40", "121", "364"};
  const std::vector<std::string> e_ha = {"0", "3", "24", "147", "816", "4323"};
  const std::vector<std::string> e_r1 = {"4/3", "146/9", "3034/27", "52916/81"};

  for (std::size_t i = 0; i < e_ra.size(); ++i) CHECK(gw::e_random_to_any(int(i) + 1) == rat(e_ra[i]));
  for (std::size_t i = 0; i < e_13.size(); ++i) CHECK(gw::e_one_to_three(int(i) + 1) == rat(e_13[i]));
  for (std::size_t i = 0; i < e_1a.size(); ++i) CHECK(gw::e_one_to_any(int(i) + 1) == rat(e_1a[i]));
  for (std::size_t i = 0; i < e_ha.size(); ++i) CHECK(gw::e_half_to_any(int(i) + 1) == rat(e_ha[i]));
  for (std::size_t i = 0; i < e_r1.size(); ++i) CHECK(gw::e_random_to_one(int(i) + 1) == rat(e_r1[i]));

  CHECK(gw::e_random_to_any(0) == 0);
}

TEST_CASE("closed_form dispatches to the right formula") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(gw::closed_form(gw::PuzzleVariant::RandomToAny, n) == gw::e_random_to_any(n));
    CHECK(gw::closed_form(gw::PuzzleVariant::OneToThree, n) == gw::e_one_to_three(n));
    CHECK(gw::closed_form(gw::PuzzleVariant::OneToAny, n) == gw::e_one_to_any(n));
    CHECK(gw::closed_form(gw::PuzzleVariant::HalfToAny, n) == gw::e_half_to_any(n));
    CHECK(gw::closed_form(gw::PuzzleVariant::RandomToOne, n) == gw::e_random_to_one(n));
  }
}

TEST_CASE("the two random-to-one forms agree, n = 1..30") {
  for (int n = 1; n <= 30; ++n)
    CHECK(gw::e_random_to_one(n) == gw::e_random_to_one_single_fraction(n));
}

TEST_CASE("q1 recurrence matches the closed form, n = 1..50") {
  for (int n = 1; n <= 50; ++n) CHECK(gw::q1_recurrence(n) == gw::q1_closed(n));
}

TEST_CASE("p/q values") {
  gw::PQValues v1 = gw::pq_closed(1);
  CHECK(v1.p1 == 0);
  CHECK(v1.p2 == rat("1/2"));
  CHECK(v1.q1 == 0);
  CHECK(v1.q2 == 1);
  CHECK(v1.q3 == 0);

  gw::PQValues v2 = gw::pq_closed(2);
  CHECK(v2.p1 == rat("5/8"));
  CHECK(v2.p2 == rat("3/16"));
  CHECK(v2.q1 == rat("1/8"));
  CHECK(v2.q2 == rat("5/8"));
  CHECK(v2.q3 == rat("1/4"));

  for (int n = 1; n <= 20; ++n) {
    gw::PQValues v = gw::pq_closed(n);
    CHECK(v.p1 + 2 * v.p2 == 1);
    CHECK(v.q1 + v.q2 + v.q3 == 1);
    CHECK(v.q3 == 2 * v.q1);
    CHECK(v.p1 == 5 * v.q1);
  }
}

TEST_CASE("monotonicity in n, n = 1..20") {
  for (int n = 2; n <= 20; ++n) {
    CHECK(gw::e_random_to_any(n) > gw::e_random_to_any(n - 1));
    CHECK(gw::e_one_to_three(n) > gw::e_one_to_three(n - 1));
    CHECK(gw::e_one_to_any(n) > gw::e_one_to_any(n - 1));
    CHECK(gw::e_half_to_any(n) > gw::e_half_to_any(n - 1));
    CHECK(gw::e_random_to_one(n) > gw::e_random_to_one(n - 1));
  }
}

TEST_CASE("identity battery holds, n = 2..6") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<gw::IdentityCheck> checks = gw::check_identities(n);
    CHECK(checks.size() == 11);
    for (const gw::IdentityCheck& c : checks) {
      INFO("n = " << n << ", " << c.name << ": " << c.detail);
      CHECK(c.holds);
    }
  }
}

TEST_CASE("wye resistance and counting helpers") {
  CHECK(gw::wye_resistance_closed(1) == rat("1/3"));
  CHECK(gw::wye_resistance_closed(2) == rat("8/9"));
  CHECK(gw::wye_resistance_closed(3) == rat("49/27"));
  CHECK(gw::edge_count_closed(1) == 3);
  CHECK(gw::edge_count_closed(2) == 12);
  CHECK(gw::edge_count_closed(3) == 39);
  CHECK(gw::edge_count_closed(10) == 88572);
  CHECK(gw::min_moves(1) == 1);
  CHECK(gw::min_moves(3) == 7);
  CHECK(gw::min_moves(64) == gw::pow2(64) - 1);
}

TEST_CASE("expected moves dwarf the minimum at n = 64") {
  // E_{1->3}(64) / (2^64 - 1) > 2.9e25, in exact arithmetic.
  gw::Rational ratio = gw::e_one_to_three(64) / gw::Rational(gw::pow2(64) - 1);
  CHECK(ratio > gw::Rational(29) * gw::Rational(gw::pow_int(10, 24)));
}

TEST_CASE("variant names round-trip") {
  for (gw::PuzzleVariant v : gw::kAllVariants) {
    CHECK(gw::parse_variant(gw::variant_name(v)) == v);
  }
  CHECK(gw::parse_variant("RTOA") == gw::PuzzleVariant::RandomToAny);
  CHECK(gw::parse_variant("halftoa") == gw::PuzzleVariant::HalfToAny);
  CHECK(!gw::parse_variant("bogus").has_value());
}
