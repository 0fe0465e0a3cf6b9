#include "tvx/multiform.hpp"

#include <algorithm>

namespace tvx {

namespace {

// n (n-1) ... (n-k+1); zero when k > n.
Integer falling(int n, int k) {
  if (k > n) return 0;
  Integer out(1);
  for (int i = 0; i < k; ++i) out *= (n - i);
  return out;
}

int effective(const std::optional<int>& o) { return o.value_or(0); }

Orders merged_sum(const Orders& a, const Orders& b) {
  Orders out{};
  for (int i = 0; i < kPairCount; ++i)
    if (a[i] || b[i]) out[i] = effective(a[i]) + effective(b[i]);
  return out;
}

void require_active(const MultiForm& f, Pair pair) {
  if (!f.active(pair)) throw Error("inactive pair");
}

}  // namespace

char pair_name(Pair pair) {
  static constexpr char names[] = {'p', 'q', 'u', 'v', 'w', 'x', 'y', 'z'};
  return names[index_of(pair)];
}

Pair parse_pair(std::string_view name) {
  if (name.size() == 1) {
    for (Pair p : kAllPairs)
      if (pair_name(p) == name[0]) return p;
  }
  throw Error("unknown pair name: " + std::string(name));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < out.exps.size(); ++i) {
    int e = a.exps[i] + b.exps[i];
    if (e > 255) throw Error("exponent out of range");
    out.exps[i] = static_cast<std::uint8_t>(e);
  }
  return out;
}

MultiForm::MultiForm(Terms terms, const Orders& orders) : terms_(std::move(terms)), orders_(orders) {
  purge_and_check();
}

void MultiForm::purge_and_check() {
  for (int i = 0; i < kPairCount; ++i)
    if (orders_[i] && *orders_[i] < 0) throw Error("negative declared order");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
      continue;
    }
    for (Pair p : kAllPairs) {
      int deg = it->first.degree(p);
      if (deg != effective(orders_[index_of(p)]))
        throw Error(std::string("degree bookkeeping violated in pair ") + pair_name(p));
    }
    ++it;
  }
}

MultiForm MultiForm::from_terms(Terms terms, const Orders& orders) { return MultiForm(std::move(terms), orders); }

MultiForm MultiForm::monomial(const Rational& coeff,
                              std::initializer_list<std::pair<Pair, std::array<int, 2>>> exps) {
  Monomial mono;
  Orders orders{};
  for (const auto& [pair, e] : exps) {
    if (orders[index_of(pair)]) throw Error("duplicate pair in monomial");
    mono.set(pair, 0, e[0]);
    mono.set(pair, 1, e[1]);
    orders[index_of(pair)] = e[0] + e[1];
  }
  Terms terms;
  if (coeff != 0) terms.emplace(mono, coeff);
  return MultiForm(std::move(terms), orders);
}

MultiForm MultiForm::constant(const Rational& coeff, std::initializer_list<Pair> active) {
  Orders orders{};
  for (Pair p : active) orders[index_of(p)] = 0;
  Terms terms;
  if (coeff != 0) terms.emplace(Monomial{}, coeff);
  return MultiForm(std::move(terms), orders);
}

Rational MultiForm::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> MultiForm::scalar_multiple_of(const Monomial& mono) const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1 || terms_.begin()->first != mono) return std::nullopt;
  return terms_.begin()->second;
}

MultiForm& MultiForm::operator+=(const MultiForm& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    *this = other;
    return *this;
  }
  for (int i = 0; i < kPairCount; ++i) {
    if (effective(orders_[i]) != effective(other.orders_[i])) throw Error("order mismatch in sum");
    if (other.orders_[i]) orders_[i] = other.orders_[i];
  }
  for (const auto& [mono, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiForm& MultiForm::operator-=(const MultiForm& other) { return *this += (-other); }

MultiForm& MultiForm::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= scale;
  return *this;
}

MultiForm operator+(MultiForm a, const MultiForm& b) { return a += b; }
MultiForm operator-(MultiForm a, const MultiForm& b) { return a -= b; }
MultiForm operator-(MultiForm a) { return a *= Rational(-1); }
MultiForm operator*(MultiForm a, const Rational& s) { return a *= s; }
MultiForm operator*(const Rational& s, MultiForm a) { return a *= s; }

MultiForm operator*(const MultiForm& a, const MultiForm& b) {
  TermAccumulator acc(merged_sum(a.orders(), b.orders()));
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) acc.add(ma * mb, ca * cb);
  return std::move(acc).finish();
}

MultiForm pow(const MultiForm& base, unsigned exponent) {
  Orders unit{};
  for (int i = 0; i < kPairCount; ++i)
    if (base.orders()[i]) unit[i] = 0;
  MultiForm out = MultiForm::from_terms({{Monomial{}, Rational(1)}}, unit);
  for (unsigned i = 0; i < exponent; ++i) out = out * base;
  return out;
}

MultiForm omega(const MultiForm& f, Pair a, Pair b) { return omega(f, a, b, 1); }

MultiForm omega(const MultiForm& f, Pair a, Pair b, int power) {
  require_active(f, a);
  require_active(f, b);
  if (a == b) throw Error("degenerate omega");
  if (power < 0) throw Error("negative operator power");
  Orders orders = f.orders();
  int oa = *orders[index_of(a)], ob = *orders[index_of(b)];
  orders[index_of(a)] = std::max(0, oa - power);
  orders[index_of(b)] = std::max(0, ob - power);
  if (power > oa || power > ob) return MultiForm::zero(orders);

  TermAccumulator acc(orders);
  for (const auto& [mono, c] : f.terms()) {
    int a1 = mono.get(a, 0), a2 = mono.get(a, 1), b1 = mono.get(b, 0), b2 = mono.get(b, 1);
    for (int k = 0; k <= power; ++k) {
      // (∂a₁∂b₂)^(power-k) (−∂a₂∂b₁)^k
      if (power - k > a1 || k > a2 || k > b1 || power - k > b2) continue;
      Integer w = binomial(power, k) * falling(a1, power - k) * falling(a2, k) * falling(b1, k) *
                  falling(b2, power - k);
      if (k % 2) w = -w;
      Monomial out = mono;
      out.set(a, 0, a1 - (power - k));
      out.set(a, 1, a2 - k);
      out.set(b, 0, b1 - k);
      out.set(b, 1, b2 - (power - k));
      acc.add(out, c * Rational(w));
    }
  }
  return std::move(acc).finish();
}

MultiForm polarize(const MultiForm& f, Pair src, Pair dst, int ell) {
  require_active(f, src);
  if (src == dst) throw Error("degenerate polarization");
  if (ell < 0) throw Error("negative operator power");
  Orders orders = f.orders();
  int os = *orders[index_of(src)];
  if (ell == 0) return f;
  if (ell > os) {
    orders[index_of(src)] = 0;
    orders[index_of(dst)] = effective(orders[index_of(dst)]) + os;
    return MultiForm::zero(orders);
  }
  orders[index_of(src)] = os - ell;
  orders[index_of(dst)] = effective(orders[index_of(dst)]) + ell;

  TermAccumulator acc(orders);
  for (const auto& [mono, c] : f.terms()) {
    int s1 = mono.get(src, 0), s2 = mono.get(src, 1);
    int d1 = mono.get(dst, 0), d2 = mono.get(dst, 1);
    // (d₁∂s₁ + d₂∂s₂)^ell = Σ_k C(ell,k) d₁^k d₂^(ell-k) ∂s₁^k ∂s₂^(ell-k)
    for (int k = 0; k <= ell; ++k) {
      if (k > s1 || ell - k > s2) continue;
      Integer w = binomial(ell, k) * falling(s1, k) * falling(s2, ell - k);
      Monomial out = mono;
      out.set(src, 0, s1 - k);
      out.set(src, 1, s2 - (ell - k));
      out.set(dst, 0, d1 + k);
      out.set(dst, 1, d2 + (ell - k));
      acc.add(out, c * Rational(w));
    }
  }
  return std::move(acc).finish();
}

MultiForm bracket(Pair a, Pair b) { return bracket_pow(a, b, 1); }

MultiForm bracket_pow(Pair a, Pair b, int e) {
  if (a == b) throw Error("degenerate bracket");
  if (e < 0) throw Error("negative operator power");
  Orders orders{};
  orders[index_of(a)] = e;
  orders[index_of(b)] = e;
  TermAccumulator acc(orders);
  // (a₁b₂ − a₂b₁)^e = Σ_k C(e,k) (−1)^k (a₁b₂)^(e−k) (a₂b₁)^k
  for (int k = 0; k <= e; ++k) {
    Monomial mono;
    mono.set(a, 0, e - k);
    mono.set(a, 1, k);
    mono.set(b, 0, k);
    mono.set(b, 1, e - k);
    Integer w = binomial(e, k);
    if (k % 2) w = -w;
    acc.add(mono, Rational(w));
  }
  return std::move(acc).finish();
}

MultiForm substitute_pair(const MultiForm& f, Pair src, Pair dst) {
  require_active(f, src);
  if (src == dst) return f;
  Orders orders = f.orders();
  orders[index_of(dst)] = effective(orders[index_of(dst)]) + *orders[index_of(src)];
  orders[index_of(src)].reset();
  TermAccumulator acc(orders);
  for (const auto& [mono, c] : f.terms()) {
    Monomial out = mono;
    out.set(dst, 0, mono.get(dst, 0) + mono.get(src, 0));
    out.set(dst, 1, mono.get(dst, 1) + mono.get(src, 1));
    out.set(src, 0, 0);
    out.set(src, 1, 0);
    acc.add(out, c);
  }
  return std::move(acc).finish();
}

MultiForm drop_pair(const MultiForm& f, Pair pair) {
  if (f.order(pair).value_or(0) != 0) throw Error("cannot drop a pair of nonzero order");
  Orders orders = f.orders();
  orders[index_of(pair)].reset();
  return MultiForm::from_terms(f.terms(), orders);
}

MultiForm differentiate(const MultiForm& f, Pair pair, int component, int k) {
  require_active(f, pair);
  if (component < 0 || component > 1) throw Error("component index must be 0 or 1");
  if (k < 0) throw Error("negative operator power");
  Orders orders = f.orders();
  int o = *orders[index_of(pair)];
  orders[index_of(pair)] = std::max(0, o - k);
  if (k > o) return MultiForm::zero(orders);
  TermAccumulator acc(orders);
  for (const auto& [mono, c] : f.terms()) {
    int e = mono.get(pair, component);
    if (e < k) continue;
    Monomial out = mono;
    out.set(pair, component, e - k);
    acc.add(out, c * Rational(falling(e, k)));
  }
  return std::move(acc).finish();
}

MultiForm transform_pair(const MultiForm& f, Pair pair, const std::array<std::array<Rational, 2>, 2>& m) {
  require_active(f, pair);
  TermAccumulator acc(f.orders());
  for (const auto& [mono, c] : f.terms()) {
    int e1 = mono.get(pair, 0), e2 = mono.get(pair, 1);
    // coefficients of pair₁^(d−t) pair₂^t in (m00 p1 + m01 p2)^e1 (m10 p1 + m11 p2)^e2
    std::vector<Rational> poly(static_cast<std::size_t>(e1 + e2 + 1), Rational(0));
    for (int s = 0; s <= e1; ++s) {
      Rational first = Rational(binomial(e1, s)) * pow(m[0][0], e1 - s) * pow(m[0][1], s);
      if (first == 0) continue;
      for (int t = 0; t <= e2; ++t)
        poly[s + t] += first * Rational(binomial(e2, t)) * pow(m[1][0], e2 - t) * pow(m[1][1], t);
    }
    Monomial rest = mono;
    rest.set(pair, 0, 0);
    rest.set(pair, 1, 0);
    for (int t = 0; t <= e1 + e2; ++t) {
      Monomial out = rest;
      out.set(pair, 0, e1 + e2 - t);
      out.set(pair, 1, t);
      acc.add(out, c * poly[t]);
    }
  }
  return std::move(acc).finish();
}

Rational evaluate(const MultiForm& f, const Assignment& point) {
  Rational total(0);
  for (const auto& [mono, c] : f.terms()) {
    Rational term = c;
    for (Pair p : kAllPairs) {
      if (mono.degree(p) == 0) continue;
      auto it = point.find(p);
      if (it == point.end()) throw Error(std::string("unassigned pair ") + pair_name(p));
      term *= pow(it->second[0], mono.get(p, 0)) * pow(it->second[1], mono.get(p, 1));
    }
    total += term;
  }
  return total;
}

MultiForm exact_divide(const MultiForm& f, const MultiForm& g) {
  if (g.is_zero()) throw Error("division by zero form");
  Orders orders{};
  for (int i = 0; i < kPairCount; ++i) {
    int d = effective(f.orders()[i]) - effective(g.orders()[i]);
    if (d < 0) throw Error("inexact division");
    if (f.orders()[i] || g.orders()[i]) orders[i] = d;
  }
  const auto& [lead_g, lead_c] = *g.terms().rbegin();
  MultiForm::Terms rem = f.terms();
  MultiForm::Terms quotient;
  while (!rem.empty()) {
    auto [lead_r, lead_rc] = *rem.rbegin();
    Monomial t;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (lead_r.exps[i] < lead_g.exps[i]) throw Error("inexact division");
      t.exps[i] = static_cast<std::uint8_t>(lead_r.exps[i] - lead_g.exps[i]);
    }
    Rational tc = lead_rc / lead_c;
    quotient.emplace(t, tc);
    for (const auto& [mg, cg] : g.terms()) {
      Monomial prod = t * mg;
      auto [it, inserted] = rem.try_emplace(prod, -tc * cg);
      if (!inserted) {
        it->second -= tc * cg;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return MultiForm::from_terms(std::move(quotient), orders);
}

}  // namespace tvx
