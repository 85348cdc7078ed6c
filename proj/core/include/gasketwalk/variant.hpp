#pragma once

#include <optional>
#include <string>

namespace gasketwalk {

/// The five start/stop conventions for the random walk.
///
///   RandomToAny  uniform random start, stop at any perfect tower
///   OneToThree   start with the tower on peg 1, stop when it is on peg 3
///   OneToAny     start with the tower on peg 1, stop at any perfect tower
///                after at least one move
///   HalfToAny    start from the half state (disks 1..n-1 on peg 1, disk n
///                on peg 2), stop at any perfect tower
///   RandomToOne  uniform random start, stop with the tower on peg 1
enum class PuzzleVariant {
  RandomToAny,
  OneToThree,
  OneToAny,
  HalfToAny,
  RandomToOne,
};

inline constexpr PuzzleVariant kAllVariants[] = {
    PuzzleVariant::RandomToAny, PuzzleVariant::OneToThree, PuzzleVariant::OneToAny,
    PuzzleVariant::HalfToAny,   PuzzleVariant::RandomToOne,
};

/// Canonical short name: rtoA, 1to3, 1toA, halfToA, rto1.
std::string variant_name(PuzzleVariant v);

/// Inverse of variant_name, case-insensitive; nullopt for unknown names.
std::optional<PuzzleVariant> parse_variant(const std::string& name);

}  // namespace gasketwalk
