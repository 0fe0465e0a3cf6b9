#include "tvx/transvectant.hpp"

#include <algorithm>

namespace tvx {

namespace {

void check_index(int m, int n, int r) {
  if (m < 0 || n < 0 || r < 0 || r > m || r > n) throw Error("transvectant index out of range");
}

// Some pair other than `p`, used as the second copy of the variables.
Pair partner(Pair p) { return p == Pair::y ? Pair::w : Pair::y; }

Orders only(Pair pair, int order) {
  Orders o{};
  o[index_of(pair)] = order;
  return o;
}

}  // namespace

Rational factor_f(int m, int n, int r) {
  check_index(m, n, r);
  return make_rational(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n));
}

Rational factor_g(int m, int n, int r) {
  check_index(m, n, r);
  return make_rational(binomial(m, r) * binomial(n, r), binomial(m + n - r + 1, r));
}

Rational factor_h(int m, int n, int r) {
  check_index(m, n, r);
  return make_rational(factorial(m + n - 2 * r + 1), factorial(m + n - r + 1) * factorial(r));
}

BinaryForm transvect(const BinaryForm& a, const BinaryForm& b, int r) {
  if (a.pair() != b.pair()) throw Error("binary forms over different pairs");
  int m = a.order(), n = b.order();
  check_index(m, n, r);
  Pair x = a.pair(), y = partner(x);
  MultiForm f = omega(a.form() * substitute_pair(b.form(), x, y), x, y, r);
  f = substitute_pair(f, y, x);
  f *= factor_f(m, n, r);
  return BinaryForm(x, f);
}

BinaryForm transvect_by_derivatives(const BinaryForm& a, const BinaryForm& b, int r) {
  if (a.pair() != b.pair()) throw Error("binary forms over different pairs");
  int m = a.order(), n = b.order();
  check_index(m, n, r);
  Pair x = a.pair();
  MultiForm sum = MultiForm::zero(only(x, m + n - 2 * r));
  for (int i = 0; i <= r; ++i) {
    MultiForm da = differentiate(differentiate(a.form(), x, 0, r - i), x, 1, i);
    MultiForm db = differentiate(differentiate(b.form(), x, 0, i), x, 1, r - i);
    MultiForm term = da * db;
    term *= Rational(binomial(r, i)) * (i % 2 ? -1 : 1);
    sum += term;
  }
  sum *= factor_f(m, n, r);
  return BinaryForm(x, sum);
}

BinaryForm project_pi(const MultiForm& f, int r) {
  if (!f.active(Pair::x) || !f.active(Pair::y)) throw Error("inactive pair");
  for (Pair p : kAllPairs)
    if (p != Pair::x && p != Pair::y && f.order(p).value_or(0) != 0) throw Error("form must live in pairs x, y");
  int m = *f.order(Pair::x), n = *f.order(Pair::y);
  check_index(m, n, r);
  MultiForm g = omega(f, Pair::x, Pair::y, r);
  g = substitute_pair(g, Pair::y, Pair::x);
  g *= factor_f(m, n, r);
  return BinaryForm(Pair::x, MultiForm::from_terms(g.terms(), only(Pair::x, m + n - 2 * r)));
}

MultiForm section_iota(const BinaryForm& c, int m, int n, int r) {
  check_index(m, n, r);
  int big = m + n - 2 * r;
  if (c.order() != big) throw Error("order mismatch for section");
  MultiForm z = c.pair() == Pair::z ? c.form() : substitute_pair(c.form(), c.pair(), Pair::z);
  MultiForm spread = polarize(polarize(z, Pair::z, Pair::x, m - r), Pair::z, Pair::y, n - r);
  spread = drop_pair(spread, Pair::z);
  MultiForm out = bracket_pow(Pair::x, Pair::y, r) * spread;
  out *= factor_g(m, n, r) / Rational(factorial(big));
  return out;
}

MultiForm trace_element(int m) { return bracket_pow(Pair::x, Pair::y, m); }

JacobianVerdict jacobian_exchange_check(const BinaryForm& a, const BinaryForm& b, const BinaryForm& q,
                                        const BinaryForm& r) {
  int m = a.order(), n = b.order(), s = q.order();
  if (r.order() != s) throw Error("Q and R must share an order");
  JacobianVerdict v;
  if (m + s == 0 || n + s == 0) {
    // No first transvectant exists; both sides are the zero form.
    v.lhs = v.rhs = BinaryForm(a.pair(), std::max(0, m + n + 2 * s - 2));
    v.holds = true;
    return v;
  }
  v.lhs = transvect(a * q, b * r, 1) - transvect(a * r, b * q, 1);
  if (s == 0) {
    v.rhs = BinaryForm(a.pair(), v.lhs.order());
  } else {
    Rational k = make_rational(Integer(s) * (m + n + 2 * s), Integer(m + s) * (n + s));
    v.rhs = k * (a * b * transvect(q, r, 1));
  }
  v.holds = v.lhs == v.rhs;
  return v;
}

}  // namespace tvx
