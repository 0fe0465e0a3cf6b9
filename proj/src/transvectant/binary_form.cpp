#include "tvx/binary_form.hpp"

#include "tvx/multiform_json.hpp"
#include "tvx/random.hpp"

namespace tvx {

Convention parse_convention(std::string_view name) {
  if (name == "monomial") return Convention::monomial;
  if (name == "binomial") return Convention::binomial;
  throw Error("unknown coefficient convention: " + std::string(name));
}

const char* convention_name(Convention c) { return c == Convention::monomial ? "monomial" : "binomial"; }

namespace {

Orders single(Pair pair, int order) {
  Orders o{};
  o[index_of(pair)] = order;
  return o;
}

}  // namespace

BinaryForm::BinaryForm(Pair pair, int order) : pair_(pair), order_(order), form_(MultiForm::zero(single(pair, order))) {
  if (order < 0) throw Error("negative order");
}

BinaryForm::BinaryForm(Pair pair, MultiForm form) : pair_(pair), order_(0), form_(std::move(form)) {
  for (Pair p : kAllPairs) {
    if (p == pair) continue;
    if (form_.order(p).value_or(0) != 0) throw Error("binary form must live in a single pair");
  }
  if (!form_.active(pair)) throw Error("inactive pair");
  order_ = *form_.order(pair);
  // Drop order-0 bookkeeping for other pairs so equality is structural.
  MultiForm::Terms terms = form_.terms();
  form_ = MultiForm::from_terms(std::move(terms), single(pair, order_));
}

BinaryForm BinaryForm::from_coeffs(Pair pair, const std::vector<Rational>& coeffs, Convention convention) {
  if (coeffs.empty()) throw Error("empty coefficient list");
  int m = static_cast<int>(coeffs.size()) - 1;
  MultiForm::Terms terms;
  for (int i = 0; i <= m; ++i) {
    Rational c = coeffs[i];
    if (convention == Convention::binomial) c *= Rational(binomial(m, i));
    if (c == 0) continue;
    Monomial mono;
    mono.set(pair, 0, m - i);
    mono.set(pair, 1, i);
    terms.emplace(mono, c);
  }
  return BinaryForm(pair, MultiForm::from_terms(std::move(terms), single(pair, m)));
}

BinaryForm BinaryForm::linear_power(Pair pair, const Rational& c1, const Rational& c2, int power) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(power + 1));
  for (int i = 0; i <= power; ++i) coeffs[i] = Rational(binomial(power, i)) * pow(c1, power - i) * pow(c2, i);
  return from_coeffs(pair, coeffs);
}

std::vector<Rational> BinaryForm::coeffs(Convention convention) const {
  std::vector<Rational> out(static_cast<std::size_t>(order_ + 1));
  for (const auto& [mono, c] : form_.terms()) {
    int i = mono.get(pair_, 1);
    out[i] = convention == Convention::binomial ? c / Rational(binomial(order_, i)) : c;
  }
  return out;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& other) {
  if (other.pair_ != pair_ || other.order_ != order_) throw Error("order mismatch in sum");
  form_ += other.form_;
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& other) {
  if (other.pair_ != pair_ || other.order_ != order_) throw Error("order mismatch in sum");
  form_ -= other.form_;
  return *this;
}

BinaryForm& BinaryForm::operator*=(const Rational& s) {
  form_ *= s;
  return *this;
}

BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
BinaryForm operator*(BinaryForm a, const Rational& s) { return a *= s; }
BinaryForm operator*(const Rational& s, BinaryForm a) { return a *= s; }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  if (a.pair() != b.pair()) throw Error("binary forms over different pairs");
  return BinaryForm(a.pair(), a.form() * b.form());
}

BinaryForm pow(const BinaryForm& base, unsigned exponent) {
  return BinaryForm(base.pair(), pow(base.form(), exponent));
}

BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g) {
  if (f.pair() != g.pair()) throw Error("binary forms over different pairs");
  return BinaryForm(f.pair(), exact_divide(f.form(), g.form()));
}

nlohmann::json to_json(const BinaryForm& form, Convention convention) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : form.coeffs(convention)) coeffs.push_back(to_string(c));
  return {{"pair", std::string(1, pair_name(form.pair()))},
          {"order", form.order()},
          {"convention", convention_name(convention)},
          {"coeffs", coeffs},
          {"form", to_json(form.form())}};
}

namespace {

std::vector<Rational> parse_coeff_array(const nlohmann::json& arr) {
  std::vector<Rational> out;
  for (const auto& c : arr) out.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
  return out;
}

}  // namespace

BinaryForm binary_form_from_json(const nlohmann::json& j, Convention fallback) {
  if (j.is_array()) return BinaryForm::from_coeffs(Pair::x, parse_coeff_array(j), fallback);
  if (!j.is_object()) throw Error("malformed binary form JSON");
  if (j.contains("coeffs")) {
    Pair pair = j.contains("pair") ? parse_pair(j.at("pair").get<std::string>()) : Pair::x;
    Convention conv = j.contains("convention") ? parse_convention(j.at("convention").get<std::string>()) : fallback;
    BinaryForm f = BinaryForm::from_coeffs(pair, parse_coeff_array(j.at("coeffs")), conv);
    if (j.contains("order") && j.at("order").get<int>() != f.order()) throw Error("order does not match coefficient count");
    return f;
  }
  if (j.contains("form")) return binary_form_from_json(j.at("form"), fallback);
  MultiForm mf = multiform_from_json(j);
  std::optional<Pair> chosen;
  for (Pair p : kAllPairs) {
    if (!mf.active(p)) continue;
    if (!chosen || mf.order(p).value_or(0) > 0) chosen = p;
    if (mf.order(p).value_or(0) > 0) break;
  }
  if (!chosen) throw Error("form JSON has no active pair");
  return BinaryForm(*chosen, mf);
}

BinaryForm random_binary_form(CounterRng& rng, int order, Pair pair) {
  return BinaryForm::from_coeffs(pair, rng.small_rationals(static_cast<std::size_t>(order + 1)));
}

}  // namespace tvx
