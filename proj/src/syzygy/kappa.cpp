#include <algorithm>

#include "chain.hpp"
#include "tvx/syzygy.hpp"
#include "tvx/transvectant.hpp"

namespace tvx {

namespace {

Integer fac(long k) {
  if (k < 0) throw Error("negative factorial argument in kappa");
  return factorial(k);
}

void check_admissible(int m, int n, int r, int i, int j, LatticePoint p) {
  if (r < 2) throw Error("no quadratic syzygies below weight 2");
  if (r > std::min(m, n)) throw Error("transvectant index out of range");
  if (i < 0 || j < 0 || i + j > r) throw Error("inadmissible index pair");
  if (p.a < 0 || p.b < 0 || 2 * (p.a + p.b + 1) > r) throw Error("lattice point outside the admissible set");
}

template <typename Visit>
void for_each_triple(int m, int n, int r, int i, int j, LatticePoint p, Visit visit) {
  const int a = p.a, b = p.b;
  for (int x = 0; x <= std::min(n - 2 * b - 1, n - j); ++x) {
    int ylo = std::max(0, n - r + 2 * a + 1 - x), yhi = std::min(2 * a + 1, 2 * n - r + 2 * a - 2 * b);
    for (int y = ylo; y <= yhi; ++y) {
      int zlo = std::max(0, r - m - i - x), zhi = std::min({n - i, r - i - j, n - i + 2 * a + 1 - y});
      for (int z = zlo; z <= zhi; ++z) visit(x, y, z);
    }
  }
}

}  // namespace

std::vector<LatticePoint> pi_set(int m, int n, int r) {
  if (r < 2) throw Error("no quadratic syzygies below weight 2");
  if (r > std::min(m, n)) throw Error("transvectant index out of range");
  std::vector<LatticePoint> out;
  for (int a = 0; 2 * (a + 1) <= r; ++a)
    for (int b = 0; 2 * (a + b + 1) <= r; ++b) out.push_back({a, b});
  return out;
}

std::size_t kappa_support_size(int m, int n, int r, int i, int j, LatticePoint p) {
  check_admissible(m, n, r, i, j, p);
  std::size_t count = 0;
  for_each_triple(m, n, r, i, j, p, [&](int, int, int) { ++count; });
  return count;
}

Rational kappa(int m, int n, int r, int i, int j, LatticePoint p) {
  check_admissible(m, n, r, i, j, p);
  const int a = p.a, b = p.b;
  Integer n1 = fac(m + n - 2 * i + 1) * fac(m + n - 2 * j + 1) * fac(2 * m - 2 * a) * fac(2 * a + 1) *
               fac(m - 2 * a - 1) * fac(n - 2 * b - 1) * fac(2 * m - r - 2 * a + 2 * b) *
               fac(2 * n - r + 2 * a - 2 * b) * fac(2 * m + 2 * n - r - 2 * a - 2 * b - 1);
  Integer n2 = fac(j) * fac(m - i) * fac(m - j) * fac(m + n - j + 1) * fac(m + n - r + i - j) *
               fac(m + n - r - i + j) * fac(2 * m + 2 * n - r - i - j + 1) * fac(2 * m - 4 * a - 2) *
               fac(2 * n - 4 * b - 2);
  Rational gamma(0);
  for_each_triple(m, n, r, i, j, p, [&](int x, int y, int z) {
    Integer t1 = fac(n - x) * fac(m - j + x) * fac(n - 2 * b - 1 + x) * fac(m - 2 * a - 1 + y) *
                 fac(r - 2 * a - 2 * b - 2 + y) * fac(m + n - 2 * i - z) * fac(m + n - r + i - j + z) *
                 fac(n - i + 2 * a + 1 - y - z);
    Integer t2 = fac(x) * fac(y) * fac(z) * fac(n - j - x) * fac(n - 2 * b - 1 - x) * fac(2 * a + 1 - y) *
                 fac(2 * m - 4 * a - 1 + y) * fac(2 * n - r + 2 * a - 2 * b - y) * fac(n - i - z) *
                 fac(r - i - j - z) * fac(m + n - i + 1 - z) * fac(m - r + i + x + z) *
                 fac(-n + r - 2 * a - 1 + x + y);
    Rational term = make_rational(t1, t2);
    if ((x + y + z) % 2) gamma -= term;
    else gamma += term;
  });
  if ((n - j) % 2) gamma = -gamma;
  return make_rational(n1, n2) * gamma;
}

namespace detail {

// δ∘θ₃∘θ₂∘θ₁ applied to z₁^{2(m+n−r)}: a form in p, q (order m) and u, v (order n).
MultiForm kappa_chain_head(int m, int n, int r, LatticePoint p) {
  const int a = p.a, b = p.b;
  const int big = 2 * (m + n - r);
  MultiForm f = MultiForm::monomial(1, {{Pair::z, {big, 0}}});

  f = polarize(f, Pair::z, Pair::x, 2 * m - 2 * a + 2 * b - r);
  f = polarize(f, Pair::z, Pair::y, 2 * n + 2 * a - 2 * b - r);
  f = drop_pair(f, Pair::z);
  f = bracket_pow(Pair::x, Pair::y, r - 2 * a - 2 * b - 2) * f;
  f *= make_rational(Integer(1), factorial(big));

  f = polarize(f, Pair::x, Pair::p, m - 2 * a - 1);
  f = polarize(f, Pair::x, Pair::q, m - 2 * a - 1);
  f = drop_pair(f, Pair::x);
  f = polarize(f, Pair::y, Pair::u, n - 2 * b - 1);
  f = polarize(f, Pair::y, Pair::v, n - 2 * b - 1);
  f = drop_pair(f, Pair::y);
  f = bracket_pow(Pair::p, Pair::q, 2 * a) * bracket_pow(Pair::u, Pair::v, 2 * b) * f;
  f *= make_rational(Integer(1), factorial(2 * m - 4 * a - 2) * factorial(2 * n - 4 * b - 2));

  return bracket(Pair::p, Pair::q) * bracket(Pair::u, Pair::v) * f;
}

// η₄∘η₃∘η₂∘η₁ on the head form, read as a multiple of z₁^{2(m+n−r)}.
Rational kappa_chain_tail(const MultiForm& head, int m, int n, int r, int i, int j) {
  MultiForm f = omega(head, Pair::p, Pair::u, i);
  f = omega(f, Pair::q, Pair::v, j);
  f = substitute_pair(substitute_pair(f, Pair::p, Pair::x), Pair::u, Pair::x);
  f = substitute_pair(substitute_pair(f, Pair::q, Pair::y), Pair::v, Pair::y);
  f *= factor_h(m, n, i) * factor_h(m, n, j);

  f = omega(f, Pair::x, Pair::y, r - i - j);
  f = substitute_pair(substitute_pair(f, Pair::x, Pair::z), Pair::y, Pair::z);
  f *= factor_h(m + n - 2 * i, m + n - 2 * j, r - i - j);

  Monomial target;
  target.set(Pair::z, 0, 2 * (m + n - r));
  auto scalar = f.scalar_multiple_of(target);
  if (!scalar) throw Error("operator chain inconsistent");
  return *scalar;
}

}  // namespace detail

Rational kappa_oracle(int m, int n, int r, int i, int j, LatticePoint p) {
  check_admissible(m, n, r, i, j, p);
  return detail::kappa_chain_tail(detail::kappa_chain_head(m, n, r, p), m, n, r, i, j);
}

}  // namespace tvx
