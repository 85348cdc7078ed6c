#include <cstdint>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "gasketwalk/errors.hpp"
#include "gasketwalk/formulas.hpp"
#include "gasketwalk/graph.hpp"
#include "gasketwalk/state.hpp"

namespace gw = gasketwalk;

TEST_CASE("edge count matches the closed form, n = 1..10") {
  for (int n = 1; n <= 10; ++n) {
    gw::StateGraph g = gw::build_graph(n);
    CHECK(g.vertex_count() == gw::state_count(n));
    CHECK(gw::BigInt(static_cast<unsigned long>(g.edge_count())) == gw::edge_count_closed(n));
  }
}

TEST_CASE("adjacency agrees with move enumeration, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    gw::StateGraph g = gw::build_graph(n);
    for (std::uint64_t code = 0; code < gw::state_count(n); ++code) {
      gw::HanoiState s(n, code);
      std::set<std::uint32_t> expect;
      for (const gw::Move& m : gw::legal_moves(s))
        expect.insert(static_cast<std::uint32_t>(gw::apply_move(s, m).code()));
      auto nbrs = g.neighbors(static_cast<std::uint32_t>(code));
      CHECK(std::set<std::uint32_t>(nbrs.begin(), nbrs.end()) == expect);
      CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
      CHECK(g.degree(static_cast<std::uint32_t>(code)) == static_cast<int>(expect.size()));
    }
  }
}

TEST_CASE("degree-2 vertices are exactly the three corners") {
  for (int n = 1; n <= 8; ++n) {
    gw::StateGraph g = gw::build_graph(n);
    std::set<std::uint32_t> corners;
    for (gw::Peg p : {gw::kPeg1, gw::kPeg2, gw::kPeg3})
      corners.insert(static_cast<std::uint32_t>(gw::corner_code(n, p)));
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
      CHECK(g.degree(v) == (corners.count(v) ? 2 : 3));
  }
}

TEST_CASE("named codes") {
  CHECK(gw::corner_code(3, gw::kPeg1) == 0);
  CHECK(gw::corner_code(3, gw::kPeg2) == 13);
  CHECK(gw::corner_code(3, gw::kPeg3) == 26);
  CHECK(gw::half_code(3) == 9);
  CHECK(gw::half_code(1) == 1);
}

TEST_CASE("graph is connected, n <= 8") {
  for (int n = 1; n <= 8; ++n) CHECK(gw::is_connected(gw::build_graph(n)));
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(gw::build_graph(gw::kMaxGraphDisks + 1), gw::TooLarge);
  CHECK_THROWS_AS(gw::build_graph(0), gw::TooLarge);
}

TEST_CASE("edge list export") {
  gw::StateGraph g = gw::build_graph(1);
  std::ostringstream os;
  gw::write_edge_list(g, os);
  CHECK(os.str() == "0 1\n0 2\n1 2\n");

  // Bigger graphs: right line count, each line u < v, sorted.
  gw::StateGraph g3 = gw::build_graph(3);
  std::ostringstream os3;
  gw::write_edge_list(g3, os3);
  std::istringstream in(os3.str());
  std::uint64_t u, v, lines = 0;
  std::pair<std::uint64_t, std::uint64_t> prev{0, 0};
  bool first = true;
  while (in >> u >> v) {
    CHECK(u < v);
    if (!first) CHECK(prev < std::make_pair(u, v));
    prev = {u, v};
    first = false;
    ++lines;
  }
  CHECK(gw::BigInt(static_cast<unsigned long>(lines)) == gw::edge_count_closed(3));
}
