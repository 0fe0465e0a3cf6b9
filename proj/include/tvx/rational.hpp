#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tvx {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised for every contract violation in the library. The message is the
// short, stable tag documented for each operation ("inactive pair", ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "p/q" in lowest terms; integers keep the "/1" so the format is uniform.
std::string to_string(const Rational& value);

// Accepts "p/q", "p", "-p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

Integer factorial(long n);
Integer binomial(long n, long k);

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign_of(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

Rational pow(const Rational& base, unsigned exponent);

}  // namespace tvx
