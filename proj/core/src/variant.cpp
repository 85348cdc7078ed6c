#include "gasketwalk/variant.hpp"

#include <algorithm>
#include <cctype>

namespace gasketwalk {

std::string variant_name(PuzzleVariant v) {
  switch (v) {
    case PuzzleVariant::RandomToAny: return "rtoA";
    case PuzzleVariant::OneToThree: return "1to3";
    case PuzzleVariant::OneToAny: return "1toA";
    case PuzzleVariant::HalfToAny: return "halfToA";
    case PuzzleVariant::RandomToOne: return "rto1";
  }
  return "?";
}

std::optional<PuzzleVariant> parse_variant(const std::string& name) {
  std::string lower(name.size(), '\0');
  std::transform(name.begin(), name.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (PuzzleVariant v : kAllVariants) {
    std::string canon = variant_name(v);
    std::transform(canon.begin(), canon.end(), canon.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == canon) return v;
  }
  return std::nullopt;
}

}  // namespace gasketwalk
