#pragma once

#include <gmpxx.h>

#include <string>

namespace gasketwalk {

using BigInt = mpz_class;
using Rational = mpq_class;

/// base^exp for non-negative exp.
inline BigInt pow_int(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline BigInt pow2(unsigned long n) { return pow_int(2, n); }
inline BigInt pow3(unsigned long n) { return pow_int(3, n); }
inline BigInt pow5(unsigned long n) { return pow_int(5, n); }

/// num/den in lowest terms; den must be nonzero.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

/// "p/q" for non-integers, plain "p" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "p/q", or decimal-free signed integers; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Exact conversion of an integer-valued rational; throws std::domain_error otherwise.
BigInt to_integer(const Rational& q);

/// Nearest double (GMP rounds correctly even far outside double range).
inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace gasketwalk
