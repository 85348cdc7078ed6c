#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gasketwalk/errors.hpp"

namespace gasketwalk {

/// Largest n whose 3^n state codes fit comfortably in uint64 (3^40 < 2^64).
inline constexpr int kMaxCodeDisks = 40;

/// One of the three pegs, indexed 1..3.
class Peg {
 public:
  explicit constexpr Peg(int index) : index_(static_cast<std::uint8_t>(index)) {
    if (index < 1 || index > 3) throw IllegalMove("peg index must be 1..3");
  }

  constexpr int index() const { return index_; }
  friend constexpr auto operator<=>(Peg, Peg) = default;

 private:
  std::uint8_t index_;
};

inline constexpr Peg kPeg1{1}, kPeg2{2}, kPeg3{3};

/// Moving disk `disk` (1 = smallest) from peg `from` to peg `to`.
struct Move {
  int disk;
  Peg from;
  Peg to;

  friend constexpr auto operator<=>(const Move&, const Move&) = default;
};

inline constexpr std::uint64_t pow3_u64(int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

/// A placement of n disks on three pegs that respects the stacking rule.
///
/// Encoded as an integer in [0, 3^n): base-3 digit k-1 is the peg of disk k
/// minus one.  Any digit string is legal because each peg's disks are forced
/// into sorted order, so states and codes are in bijection.
class HanoiState {
 public:
  HanoiState(int n, std::uint64_t code) : n_(n), code_(code) {
    if (n < 1 || n > kMaxCodeDisks)
      throw TooLarge("disk count must be 1.." + std::to_string(kMaxCodeDisks));
    if (code >= pow3_u64(n)) throw IllegalMove("state code out of range");
  }

  /// Builds the state from per-disk peg assignments, pegs[k-1] = peg of disk k.
  static HanoiState from_pegs(const std::vector<Peg>& pegs);

  /// The perfect state with every disk on `p`.
  static HanoiState tower(int n, Peg p);

  int disk_count() const { return n_; }
  std::uint64_t code() const { return code_; }

  Peg peg_of(int disk) const;

  /// Smallest (= movable) disk on `p`, or nullopt when the peg is empty.
  std::optional<int> top_disk(Peg p) const;

  friend bool operator==(const HanoiState&, const HanoiState&) = default;

 private:
  int n_;
  std::uint64_t code_;
};

/// 3^n, the number of states, for n small enough to build explicit graphs.
inline std::uint64_t state_count(int n) { return pow3_u64(n); }

/// Movable disks per peg: tops[p-1] = smallest disk on peg p, 0 when empty.
/// Shared by move enumeration and the graph builder.
struct PegTops {
  int top[3];
};

PegTops peg_tops(const HanoiState& s);

/// Calls f(Move) for each legal move in (from, to) lexicographic order:
/// (1,2) (1,3) (2,1) (2,3) (3,1) (3,2).  Always 2 or 3 moves.
template <typename F>
void visit_legal_moves(const HanoiState& s, F&& f) {
  const PegTops t = peg_tops(s);
  for (int from = 0; from < 3; ++from) {
    const int disk = t.top[from];
    if (disk == 0) continue;
    for (int to = 0; to < 3; ++to) {
      if (to == from) continue;
      if (t.top[to] == 0 || t.top[to] > disk) {
        f(Move{disk, Peg(from + 1), Peg(to + 1)});
      }
    }
  }
}

/// Legal moves in (from, to) lexicographic order.
std::vector<Move> legal_moves(const HanoiState& s);

/// State after performing `m`; throws IllegalMove when `m` is not legal in `s`.
HanoiState apply_move(const HanoiState& s, const Move& m);

/// True exactly when every disk sits on `p`.
bool is_tower(const HanoiState& s, Peg p);

/// The perfect tower on peg p (code 0, (3^n-1)/2, or 3^n-1 for pegs 1, 2, 3).
HanoiState corner_state(int n, Peg p);

/// The half state: disk n alone on peg 2, disks 1..n-1 stacked on peg 1
/// (code 3^(n-1)).  For n = 1 this is simply the tower on peg 2.
HanoiState half_state(int n);

/// The peg holding all disks when s is a perfect tower, nullopt otherwise.
std::optional<Peg> all_on_one_peg(const HanoiState& s);

/// Relabels pegs: disk k moves to sigma[peg_of(k) - 1].  sigma must be a
/// bijection on {1,2,3}; this is an automorphism of the move graph.
HanoiState permute_pegs(const HanoiState& s, const std::array<Peg, 3>& sigma);

}  // namespace gasketwalk
