#include "gasketwalk/state.hpp"

namespace gasketwalk {

HanoiState HanoiState::from_pegs(const std::vector<Peg>& pegs) {
  const int n = static_cast<int>(pegs.size());
  if (n < 1 || n > kMaxCodeDisks)
    throw TooLarge("disk count must be 1.." + std::to_string(kMaxCodeDisks));
  std::uint64_t code = 0;
  for (int k = n; k >= 1; --k) {
    code = code * 3 + static_cast<std::uint64_t>(pegs[k - 1].index() - 1);
  }
  return HanoiState(n, code);
}

HanoiState HanoiState::tower(int n, Peg p) {
  if (n < 1 || n > kMaxCodeDisks)
    throw TooLarge("disk count must be 1.." + std::to_string(kMaxCodeDisks));
  // All digits equal: (p-1) * (3^n - 1) / 2.
  const std::uint64_t ones = (pow3_u64(n) - 1) / 2;
  return HanoiState(n, static_cast<std::uint64_t>(p.index() - 1) * ones);
}

Peg HanoiState::peg_of(int disk) const {
  if (disk < 1 || disk > n_) throw IllegalMove("no such disk");
  std::uint64_t c = code_;
  for (int k = 1; k < disk; ++k) c /= 3;
  return Peg(static_cast<int>(c % 3) + 1);
}

std::optional<int> HanoiState::top_disk(Peg p) const {
  std::uint64_t c = code_;
  const std::uint64_t want = static_cast<std::uint64_t>(p.index() - 1);
  for (int k = 1; k <= n_; ++k, c /= 3) {
    if (c % 3 == want) return k;
  }
  return std::nullopt;
}

PegTops peg_tops(const HanoiState& s) {
  PegTops t{{0, 0, 0}};
  std::uint64_t c = s.code();
  int found = 0;
  for (int k = 1; k <= s.disk_count() && found < 3; ++k, c /= 3) {
    const int p = static_cast<int>(c % 3);
    if (t.top[p] == 0) {
      t.top[p] = k;
      ++found;
    }
  }
  return t;
}

std::vector<Move> legal_moves(const HanoiState& s) {
  std::vector<Move> out;
  out.reserve(3);
  visit_legal_moves(s, [&out](const Move& m) { out.push_back(m); });
  return out;
}

HanoiState apply_move(const HanoiState& s, const Move& m) {
  if (m.disk < 1 || m.disk > s.disk_count()) throw IllegalMove("no such disk");
  if (m.from == m.to) throw IllegalMove("source and destination peg coincide");
  const auto from_top = s.top_disk(m.from);
  if (!from_top || *from_top != m.disk)
    throw IllegalMove("disk is not the top of its source peg");
  const auto to_top = s.top_disk(m.to);
  if (to_top && *to_top < m.disk)
    throw IllegalMove("cannot place a disk on a smaller one");
  // Rewrite digit m.disk-1 from (from-1) to (to-1).
  std::uint64_t scale = 1;
  for (int k = 1; k < m.disk; ++k) scale *= 3;
  const std::int64_t delta = m.to.index() - m.from.index();
  const std::uint64_t code =
      static_cast<std::uint64_t>(static_cast<std::int64_t>(s.code()) + static_cast<std::int64_t>(scale) * delta);
  return HanoiState(s.disk_count(), code);
}

bool is_tower(const HanoiState& s, Peg p) {
  return s == HanoiState::tower(s.disk_count(), p);
}

HanoiState corner_state(int n, Peg p) { return HanoiState::tower(n, p); }

HanoiState half_state(int n) {
  if (n < 1 || n > kMaxCodeDisks)
    throw TooLarge("disk count must be 1.." + std::to_string(kMaxCodeDisks));
  // Digits: disk n -> 1, the rest -> 0.
  return HanoiState(n, pow3_u64(n - 1));
}

std::optional<Peg> all_on_one_peg(const HanoiState& s) {
  const Peg p = s.peg_of(1);
  for (int k = 2; k <= s.disk_count(); ++k) {
    if (s.peg_of(k) != p) return std::nullopt;
  }
  return p;
}

HanoiState permute_pegs(const HanoiState& s, const std::array<Peg, 3>& sigma) {
  bool seen[3] = {false, false, false};
  for (Peg p : sigma) seen[p.index() - 1] = true;
  if (!(seen[0] && seen[1] && seen[2])) throw IllegalMove("peg permutation is not a bijection");
  std::uint64_t code = 0, scale = 1, c = s.code();
  for (int k = 1; k <= s.disk_count(); ++k, c /= 3, scale *= 3) {
    code += scale * static_cast<std::uint64_t>(sigma[c % 3].index() - 1);
  }
  return HanoiState(s.disk_count(), code);
}

}  // namespace gasketwalk
