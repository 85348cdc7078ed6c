#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "doctest.h"
#include "gasketwalk/errors.hpp"
#include "gasketwalk/state.hpp"

namespace gw = gasketwalk;

namespace {

const std::array<std::array<gw::Peg, 3>, 6> kAllPerms = {{
    {gw::kPeg1, gw::kPeg2, gw::kPeg3},
    {gw::kPeg1, gw::kPeg3, gw::kPeg2},
    {gw::kPeg2, gw::kPeg1, gw::kPeg3},
    {gw::kPeg2, gw::kPeg3, gw::kPeg1},
    {gw::kPeg3, gw::kPeg1, gw::kPeg2},
    {gw::kPeg3, gw::kPeg2, gw::kPeg1},
}};

std::set<std::uint64_t> neighbor_codes(const gw::HanoiState& s) {
  std::set<std::uint64_t> out;
  for (const gw::Move& m : gw::legal_moves(s)) out.insert(gw::apply_move(s, m).code());
  return out;
}

}  // namespace

TEST_CASE("peg and state validation") {
  CHECK_THROWS_AS(gw::Peg(0), gw::IllegalMove);
  CHECK_THROWS_AS(gw::Peg(4), gw::IllegalMove);
  CHECK_THROWS_AS(gw::HanoiState(0, 0), gw::TooLarge);
  CHECK_THROWS_AS(gw::HanoiState(gw::kMaxCodeDisks + 1, 0), gw::TooLarge);
  CHECK_THROWS_AS(gw::HanoiState(2, 9), gw::IllegalMove);
  CHECK_NOTHROW(gw::HanoiState(gw::kMaxCodeDisks, gw::pow3_u64(gw::kMaxCodeDisks) - 1));
}

TEST_CASE("code round-trips over all states, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t code = 0; code < gw::state_count(n); ++code) {
      gw::HanoiState s(n, code);
      CHECK(s.code() == code);
      std::vector<gw::Peg> pegs;
      for (int k = 1; k <= n; ++k) pegs.push_back(s.peg_of(k));
      CHECK(gw::HanoiState::from_pegs(pegs) == s);
    }
  }
}

TEST_CASE("named states") {
  CHECK(gw::HanoiState::tower(3, gw::kPeg1).code() == 0);
  CHECK(gw::HanoiState::tower(3, gw::kPeg2).code() == 13);  // (3^3-1)/2
  CHECK(gw::HanoiState::tower(3, gw::kPeg3).code() == 26);
  CHECK(gw::half_state(3).code() == 9);  // disks 1,2 on peg 1, disk 3 on peg 2
  CHECK(gw::half_state(1) == gw::HanoiState::tower(1, gw::kPeg2));

  for (int n = 1; n <= 6; ++n) {
    for (gw::Peg p : {gw::kPeg1, gw::kPeg2, gw::kPeg3}) {
      gw::HanoiState t = gw::corner_state(n, p);
      CHECK(gw::is_tower(t, p));
      CHECK(gw::all_on_one_peg(t) == p);
      for (int k = 1; k <= n; ++k) CHECK(t.peg_of(k) == p);
    }
    CHECK(gw::all_on_one_peg(gw::half_state(n)).has_value() == (n == 1));
  }
}

TEST_CASE("top disks") {
  // n = 2, code 1: disk 1 on peg 2, disk 2 on peg 1.
  gw::HanoiState s(2, 1);
  CHECK(s.top_disk(gw::kPeg1) == 2);
  CHECK(s.top_disk(gw::kPeg2) == 1);
  CHECK(s.top_disk(gw::kPeg3) == std::nullopt);
}

TEST_CASE("legal move enumeration order") {
  gw::HanoiState s(2, 1);
  std::vector<gw::Move> moves = gw::legal_moves(s);
  REQUIRE(moves.size() == 3);
  CHECK(moves[0] == gw::Move{2, gw::kPeg1, gw::kPeg3});
  CHECK(moves[1] == gw::Move{1, gw::kPeg2, gw::kPeg1});
  CHECK(moves[2] == gw::Move{1, gw::kPeg2, gw::kPeg3});
}

TEST_CASE("move counts: 2 on corners, 3 elsewhere, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t code = 0; code < gw::state_count(n); ++code) {
      gw::HanoiState s(n, code);
      std::size_t count = gw::legal_moves(s).size();
      bool corner = gw::all_on_one_peg(s).has_value();
      CHECK(count == (corner ? 2u : 3u));
    }
  }
}

TEST_CASE("moves are reversible, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t code = 0; code < gw::state_count(n); ++code) {
      gw::HanoiState s(n, code);
      for (const gw::Move& m : gw::legal_moves(s)) {
        gw::HanoiState t = gw::apply_move(s, m);
        CHECK(t.code() != s.code());
        CHECK(neighbor_codes(t).count(s.code()) == 1);
      }
    }
  }
}

TEST_CASE("apply_move rejects illegal moves") {
  gw::HanoiState s(2, 1);  // disk 1 on peg 2, disk 2 on peg 1
  // Disk 2 is not the top of peg 1's destination order: moving it onto disk 1 is illegal.
  CHECK_THROWS_AS(gw::apply_move(s, gw::Move{2, gw::kPeg1, gw::kPeg2}), gw::IllegalMove);
  // Disk 1 is not on peg 1.
  CHECK_THROWS_AS(gw::apply_move(s, gw::Move{1, gw::kPeg1, gw::kPeg3}), gw::IllegalMove);
  // Disk 2 is buried in the 2-disk tower.
  gw::HanoiState t = gw::HanoiState::tower(2, gw::kPeg1);
  CHECK_THROWS_AS(gw::apply_move(t, gw::Move{2, gw::kPeg1, gw::kPeg3}), gw::IllegalMove);
}

TEST_CASE("permute_pegs is a graph automorphism, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& sigma : kAllPerms) {
      for (std::uint64_t code = 0; code < gw::state_count(n); ++code) {
        gw::HanoiState s(n, code);
        gw::HanoiState mapped = gw::permute_pegs(s, sigma);
        std::set<std::uint64_t> image;
        for (std::uint64_t t : neighbor_codes(s))
          image.insert(gw::permute_pegs(gw::HanoiState(n, t), sigma).code());
        CHECK(image == neighbor_codes(mapped));
      }
    }
  }
}

TEST_CASE("permute_pegs rejects non-bijections") {
  CHECK_THROWS_AS(
      gw::permute_pegs(gw::HanoiState(2, 1), {gw::kPeg1, gw::kPeg1, gw::kPeg3}),
      gw::IllegalMove);
}
