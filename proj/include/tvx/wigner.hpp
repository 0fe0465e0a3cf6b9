#pragma once

#include <array>
#include <string>
#include <vector>

#include "tvx/multiform.hpp"

namespace tvx {

/// A half-integer stored as twice its value. Spins are nonnegative; the
/// magnetic labels m may be negative.
struct HalfInt {
  int twice = 0;

  static HalfInt from_twice(int t) { return HalfInt{t}; }
  static HalfInt integer(int k) { return HalfInt{2 * k}; }
  bool is_integer() const { return twice % 2 == 0; }
  auto operator<=>(const HalfInt&) const = default;
};

/// Accepts "k", "k/2", "-k/2" and decimal halves such as "1.5".
HalfInt parse_halfint(std::string_view text);
/// Odd halves print as "k/2", integers without a denominator.
std::string to_string(HalfInt h);

/// q·√s with s a squarefree positive integer; zero is stored as 0·√1.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(const Rational& coeff) : coeff_(coeff) {}  // NOLINT: rationals embed

  /// √value for a nonnegative rational.
  static QuadraticSurd sqrt_of(const Rational& value);
  static QuadraticSurd make(const Rational& coeff, const Integer& radicand);

  const Rational& coeff() const { return coeff_; }
  const Integer& radicand() const { return radicand_; }
  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const { return radicand_ == 1; }
  /// The exact square, always rational.
  Rational squared() const { return coeff_ * coeff_ * Rational(radicand_); }
  int sign() const { return sgn(coeff_); }
  double to_double() const;

  bool operator==(const QuadraticSurd& other) const = default;

  QuadraticSurd& operator*=(const QuadraticSurd& other);
  /// Only for equal radicands or a zero operand.
  QuadraticSurd& operator+=(const QuadraticSurd& other);
  QuadraticSurd& operator-=(const QuadraticSurd& other);

 private:
  Rational coeff_{0};
  Integer radicand_{1};
};

QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b);
QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b);
QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b);
QuadraticSurd operator-(QuadraticSurd a);

/// "p/q * sqrt(s)".
std::string to_string(const QuadraticSurd& s);

/// Largest square divisor split off: n = k²·s with s squarefree. Returns {k, s}.
std::pair<Integer, Integer> squarefree_split(const Integer& n);

bool is_triad(HalfInt j1, HalfInt j2, HalfInt j);
bool is_stretched(HalfInt j1, HalfInt j2, HalfInt j);

/// ⟨e_{j₁m₁} ⊗ e_{j₂m₂} | ι^PHY(e_{jm})⟩.
QuadraticSurd coupling_coefficient(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m);

QuadraticSurd threej(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m);

/// {j₁ j₂ j₁₂; j₃ J j₂₃} in reading order.
using SixJArray = std::array<HalfInt, 6>;
QuadraticSurd sixj(const SixJArray& a);

/// Rows j₁ j₂ j₁₂ / j₃ j₄ j₃₄ / j₁₃ j₂₄ J.
struct NineJArray {
  std::array<std::array<HalfInt, 3>, 3> j{};

  /// Every row and column a triad.
  bool valid() const;
  NineJArray transposed() const;
  int twice_sum() const;
  bool operator==(const NineJArray&) const = default;
};

/// "a b c; d e f; g h i".
NineJArray parse_ninej(std::string_view text);
std::string to_string(const NineJArray& a);

QuadraticSurd ninej_operator(const NineJArray& a);
QuadraticSurd ninej_triple_sum(const NineJArray& a);
/// Number of lattice triples in the triple sum.
std::size_t ninej_triple_sum_support(const NineJArray& a);

struct SymmetryVerdict {
  bool pass = false;
  int checked = 0;
  std::vector<std::string> failures;
};

/// Transposition and the 36 row/column permutations, evaluated by the triple sum.
SymmetryVerdict ninej_symmetry_check(const NineJArray& a);

/// The 9-j array ℬ attached to κ_{i,j}^{(a,b)} and its rearranged form ℬ′.
NineJArray kappa_ninej_array(int m, int n, int r, int i, int j, int a, int b);
NineJArray kappa_ninej_array_rearranged(int m, int n, int r, int i, int j, int a, int b);

/// κ through the 9-j symbol of ℬ′.
Rational kappa_via_ninej(int m, int n, int r, int i, int j, int a, int b);

/// ⟨F, G⟩ with the monomials of each pair orthogonal and ⟨x₁^k x₂^(d−k), same⟩ = 1/C(d,k).
Rational form_inner_product(const MultiForm& f, const MultiForm& g);

}  // namespace tvx
