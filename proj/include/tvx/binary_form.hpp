#pragma once

#include <json.hpp>
#include <vector>

#include "tvx/multiform.hpp"

namespace tvx {

/// How a coefficient list maps to monomials: `monomial` means c_i multiplies
/// x₁^(m−i) x₂^i directly, `binomial` means the form is Σ C(m,i) a_i x₁^(m−i) x₂^i.
enum class Convention { monomial, binomial };

Convention parse_convention(std::string_view name);
const char* convention_name(Convention c);

/// A form homogeneous of a declared order in a single variable pair.
class BinaryForm {
 public:
  BinaryForm() : BinaryForm(Pair::x, 0) {}
  /// Zero form of the given order.
  BinaryForm(Pair pair, int order);
  /// Wraps a MultiForm whose only active pair is `pair`.
  BinaryForm(Pair pair, MultiForm form);

  static BinaryForm from_coeffs(Pair pair, const std::vector<Rational>& coeffs,
                                Convention convention = Convention::monomial);
  /// c₁ x₁ + c₂ x₂ raised to the given power.
  static BinaryForm linear_power(Pair pair, const Rational& c1, const Rational& c2, int power);

  Pair pair() const { return pair_; }
  int order() const { return order_; }
  const MultiForm& form() const { return form_; }
  bool is_zero() const { return form_.is_zero(); }

  /// Coefficient list (length order+1) in the requested convention.
  std::vector<Rational> coeffs(Convention convention = Convention::monomial) const;

  bool operator==(const BinaryForm& other) const {
    return pair_ == other.pair_ && order_ == other.order_ && form_ == other.form_;
  }

  BinaryForm& operator+=(const BinaryForm& other);
  BinaryForm& operator-=(const BinaryForm& other);
  BinaryForm& operator*=(const Rational& s);

 private:
  Pair pair_;
  int order_;
  MultiForm form_;
};

BinaryForm operator+(BinaryForm a, const BinaryForm& b);
BinaryForm operator-(BinaryForm a, const BinaryForm& b);
BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
BinaryForm operator*(BinaryForm a, const Rational& s);
BinaryForm operator*(const Rational& s, BinaryForm a);
BinaryForm pow(const BinaryForm& base, unsigned exponent);

/// Exact quotient; throws "inexact division".
BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g);

nlohmann::json to_json(const BinaryForm& form, Convention convention = Convention::monomial);
/// Accepts a BinaryForm object ({"pair", "order", "coeffs", "convention"}),
/// a bare MultiForm object, or a JSON array of coefficient strings.
BinaryForm binary_form_from_json(const nlohmann::json& j, Convention fallback = Convention::monomial);

/// Random form with coefficients drawn from the small-height distribution.
class CounterRng;
BinaryForm random_binary_form(CounterRng& rng, int order, Pair pair = Pair::x);

}  // namespace tvx
