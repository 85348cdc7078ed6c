#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "gasketwalk/state.hpp"

namespace gasketwalk {

/// Explicit graphs are capped here; 3^14 ≈ 4.8M vertices is the point where
/// building them stops being interactive.
inline constexpr int kMaxGraphDisks = 14;

/// The move graph on all 3^n states in CSR form.  Vertices are state codes;
/// each undirected edge (one legal move and its inverse) appears in both
/// adjacency lists, which are sorted ascending.
class StateGraph {
 public:
  int disk_count() const { return n_; }
  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(offsets_.size() - 1); }
  std::uint64_t edge_count() const { return adjacency_.size() / 2; }

  int degree(std::uint32_t v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

 private:
  friend StateGraph build_graph(int n);

  int n_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> adjacency_;
};

/// Builds the move graph; throws TooLarge for n > kMaxGraphDisks.
StateGraph build_graph(int n);

/// Code of the perfect tower on peg p: 0, (3^n-1)/2, or 3^n-1.
std::uint64_t corner_code(int n, Peg p);

/// Code of the half start state (disk n on peg 2, the rest on peg 1): 3^(n-1).
std::uint64_t half_code(int n);

/// BFS check that every vertex is reachable from vertex 0.
bool is_connected(const StateGraph& g);

/// Writes one "u v" line per undirected edge with u < v, ordered by u then v.
void write_edge_list(const StateGraph& g, std::ostream& os);

}  // namespace gasketwalk
