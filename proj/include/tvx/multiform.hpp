#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvx/rational.hpp"

namespace tvx {

// Registry of variable pairs. Enumerators are in alphabetical order so the
// canonical term order (pair name, then component) is plain lexicographic
// order on the exponent array.
enum class Pair : std::uint8_t { p, q, u, v, w, x, y, z };

inline constexpr int kPairCount = 8;
inline constexpr std::array<Pair, kPairCount> kAllPairs{Pair::p, Pair::q, Pair::u, Pair::v,
                                                        Pair::w, Pair::x, Pair::y, Pair::z};

char pair_name(Pair pair);
Pair parse_pair(std::string_view name);

inline constexpr int index_of(Pair pair) { return static_cast<int>(pair); }

struct Monomial {
  std::array<std::uint8_t, 2 * kPairCount> exps{};

  std::uint8_t get(Pair pair, int component) const { return exps[2 * index_of(pair) + component]; }
  void set(Pair pair, int component, int e) {
    if (e < 0 || e > 255) throw Error("exponent out of range");
    exps[2 * index_of(pair) + component] = static_cast<std::uint8_t>(e);
  }
  int degree(Pair pair) const { return get(pair, 0) + get(pair, 1); }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Per-pair declared order; nullopt means the pair is inactive.
using Orders = std::array<std::optional<int>, kPairCount>;

/// Sparse exact polynomial, multihomogeneous in the variable pairs it
/// declares active. Terms never carry a zero coefficient and every term has
/// the declared total degree in each active pair; both facts are checked
/// whenever a form is built.
class MultiForm {
 public:
  using Terms = std::map<Monomial, Rational>;

  MultiForm() = default;

  static MultiForm from_terms(Terms terms, const Orders& orders);

  /// c · Π pair₁^e₁ pair₂^e₂; every listed pair becomes active.
  static MultiForm monomial(const Rational& coeff,
                            std::initializer_list<std::pair<Pair, std::array<int, 2>>> exps);

  /// The constant c with the listed pairs active at order 0.
  static MultiForm constant(const Rational& coeff, std::initializer_list<Pair> active = {});

  /// The zero form carrying the given declared orders.
  static MultiForm zero(const Orders& orders) { return MultiForm(Terms{}, orders); }

  const Terms& terms() const { return terms_; }
  const Orders& orders() const { return orders_; }
  std::optional<int> order(Pair pair) const { return orders_[index_of(pair)]; }
  bool active(Pair pair) const { return orders_[index_of(pair)].has_value(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a monomial (zero when absent).
  Rational coeff(const Monomial& mono) const;

  /// If the form is c·(single given monomial) return c, otherwise nullopt.
  std::optional<Rational> scalar_multiple_of(const Monomial& mono) const;

  bool operator==(const MultiForm& other) const { return terms_ == other.terms_; }

  MultiForm& operator+=(const MultiForm& other);
  MultiForm& operator-=(const MultiForm& other);
  MultiForm& operator*=(const Rational& scale);

 private:
  MultiForm(Terms terms, const Orders& orders);
  void purge_and_check();

  Terms terms_;
  Orders orders_{};

  friend class TermAccumulator;
};

MultiForm operator+(MultiForm a, const MultiForm& b);
MultiForm operator-(MultiForm a, const MultiForm& b);
MultiForm operator-(MultiForm a);
MultiForm operator*(const MultiForm& a, const MultiForm& b);
MultiForm operator*(MultiForm a, const Rational& s);
MultiForm operator*(const Rational& s, MultiForm a);

MultiForm pow(const MultiForm& base, unsigned exponent);

// --- symbolic differential operators -------------------------------------

/// Cayley's Omega: ∂²/∂a₁∂b₂ − ∂²/∂a₂∂b₁.
MultiForm omega(const MultiForm& f, Pair a, Pair b);

/// Omega applied `power` times (closed binomial expansion, same result).
MultiForm omega(const MultiForm& f, Pair a, Pair b, int power);

/// (dst·∂_src)^ell. Returns the zero form when ell exceeds the src order.
MultiForm polarize(const MultiForm& f, Pair src, Pair dst, int ell);

/// The bracket a₁b₂ − a₂b₁.
MultiForm bracket(Pair a, Pair b);

/// bracket(a, b)^e, expanded directly.
MultiForm bracket_pow(Pair a, Pair b, int e);

/// Replace src components by dst components; declared orders merge.
MultiForm substitute_pair(const MultiForm& f, Pair src, Pair dst);

/// Marks a pair of declared order 0 inactive.
MultiForm drop_pair(const MultiForm& f, Pair pair);

/// ∂^k / ∂(pair_component)^k.
MultiForm differentiate(const MultiForm& f, Pair pair, int component, int k = 1);

/// Linear change of variables in one pair:
/// pair₁ → m[0][0]·pair₁ + m[0][1]·pair₂, pair₂ → m[1][0]·pair₁ + m[1][1]·pair₂.
MultiForm transform_pair(const MultiForm& f, Pair pair, const std::array<std::array<Rational, 2>, 2>& m);

using Assignment = std::map<Pair, std::array<Rational, 2>>;

/// Value at a rational point. Every pair of nonzero order must be assigned.
Rational evaluate(const MultiForm& f, const Assignment& point);

/// Exact quotient q with f = q·g; throws "inexact division" otherwise.
MultiForm exact_divide(const MultiForm& f, const MultiForm& g);

/// Accumulates terms and produces a validated form.
class TermAccumulator {
 public:
  explicit TermAccumulator(const Orders& orders) : orders_(orders) {}
  void add(const Monomial& mono, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) it->second += c;
  }
  MultiForm finish() && { return MultiForm(std::move(terms_), orders_); }

 private:
  MultiForm::Terms terms_;
  Orders orders_;
};

}  // namespace tvx
