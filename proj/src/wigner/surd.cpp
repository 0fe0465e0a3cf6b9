#include <charconv>
#include <cmath>

#include "tvx/wigner.hpp"

namespace tvx {

HalfInt parse_halfint(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  auto fail = [&]() -> HalfInt { throw Error("not a half-integer: " + std::string(text)); };
  auto to_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail();
    return v;
  };
  if (text.empty()) return fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (text.substr(slash + 1) != "2") return fail();
    return HalfInt{to_int(text.substr(0, slash))};
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    bool negative = text.front() == '-';
    int whole = dot == 0 || (negative && dot == 1) ? 0 : to_int(text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0)));
    int half = 0;
    if (frac == "5") half = 1;
    else if (frac.find_first_not_of('0') != std::string_view::npos) return fail();
    int t = 2 * whole + half;
    return HalfInt{negative ? -t : t};
  }
  return HalfInt{2 * to_int(text)};
}

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

std::pair<Integer, Integer> squarefree_split(const Integer& n) {
  if (n <= 0) throw Error("squarefree part of a nonpositive integer");
  Integer rest = n, square(1), free(1);
  for (unsigned long p = 2; p <= 100000; ++p) {
    if (rest == 1) break;
    if (Integer(p) * p > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= p;
    if (e % 2) free *= p;
  }
  if (rest > 1) {
    // No prime factor below the trial bound (or rest itself is prime).
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer root;
      mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
      square *= root;
    } else if (rest < Integer("1000000000000000") || mpz_probab_prime_p(rest.get_mpz_t(), 30)) {
      // Below 10^15 a non-square with no factor under 10^5 has at most two distinct prime factors.
      free *= rest;
    } else {
      throw Error("radicand too large to factor");
    }
  }
  return {square, free};
}

QuadraticSurd QuadraticSurd::make(const Rational& coeff, const Integer& radicand) {
  if (radicand < 0) throw Error("negative radicand");
  QuadraticSurd s;
  if (coeff == 0 || radicand == 0) return s;
  auto [k, free] = squarefree_split(radicand);
  s.coeff_ = coeff * Rational(k);
  s.radicand_ = free;
  return s;
}

QuadraticSurd QuadraticSurd::sqrt_of(const Rational& value) {
  if (value < 0) throw Error("square root of a negative rational");
  // √(p/q) = (1/q)·√(p·q)
  return make(make_rational(Integer(1), value.get_den()), value.get_num() * value.get_den());
}

double QuadraticSurd::to_double() const { return coeff_.get_d() * std::sqrt(radicand_.get_d()); }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& other) {
  if (is_zero() || other.is_zero()) return *this = QuadraticSurd();
  if (radicand_ == other.radicand_) {
    coeff_ *= other.coeff_ * Rational(radicand_);
    radicand_ = 1;
    return *this;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), radicand_.get_mpz_t(), other.radicand_.get_mpz_t());
  // √(g a)·√(g b) = g·√(a b) with a, b coprime squarefree.
  coeff_ *= other.coeff_ * Rational(g);
  radicand_ = (radicand_ / g) * (other.radicand_ / g);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (radicand_ != other.radicand_) throw Error("sum of surds with different radicands");
  coeff_ += other.coeff_;
  if (coeff_ == 0) radicand_ = 1;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& other) { return *this += -other; }

QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
QuadraticSurd operator-(QuadraticSurd a) { return a *= QuadraticSurd(Rational(-1)); }

std::string to_string(const QuadraticSurd& s) {
  return to_string(s.coeff()) + " * sqrt(" + s.radicand().get_str() + ")";
}

}  // namespace tvx
