#include "gasketwalk/rational.hpp"

#include <stdexcept>

namespace gasketwalk {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

BigInt to_integer(const Rational& q) {
  if (q.get_den() != 1) {
    throw std::domain_error("not an integer: " + q.get_str());
  }
  return q.get_num();
}

}  // namespace gasketwalk
