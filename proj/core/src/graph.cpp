#include "gasketwalk/graph.hpp"

#include <algorithm>
#include <ostream>

namespace gasketwalk {

std::uint64_t corner_code(int n, Peg p) { return HanoiState::tower(n, p).code(); }

std::uint64_t half_code(int n) { return half_state(n).code(); }

StateGraph build_graph(int n) {
  if (n < 1) throw TooLarge("disk count must be positive");
  if (n > kMaxGraphDisks)
    throw TooLarge("explicit graphs are limited to n <= " + std::to_string(kMaxGraphDisks));

  const std::uint32_t nv = static_cast<std::uint32_t>(state_count(n));
  StateGraph g;
  g.n_ = n;
  g.offsets_.assign(nv + 1, 0);

  // Degree is 3 except at the three perfect towers, where only the smallest
  // disk can move; count explicitly anyway so the builder does not bake in
  // what the tests are supposed to check.
  for (std::uint32_t v = 0; v < nv; ++v) {
    int deg = 0;
    visit_legal_moves(HanoiState(n, v), [&deg](const Move&) { ++deg; });
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<std::uint64_t>(deg);
  }

  g.adjacency_.resize(g.offsets_[nv]);
  std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::uint32_t v = 0; v < nv; ++v) {
    const HanoiState s(n, v);
    visit_legal_moves(s, [&](const Move& m) {
      g.adjacency_[fill[v]++] = static_cast<std::uint32_t>(apply_move(s, m).code());
    });
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(fill[v]));
  }
  return g;
}

bool is_connected(const StateGraph& g) {
  const std::uint32_t nv = g.vertex_count();
  std::vector<char> seen(nv, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::uint32_t visited = 1;
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++visited;
        stack.push_back(u);
      }
    }
  }
  return visited == nv;
}

void write_edge_list(const StateGraph& g, std::ostream& os) {
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t u : g.neighbors(v)) {
      if (v < u) os << v << ' ' << u << '\n';
    }
  }
}

}  // namespace gasketwalk
