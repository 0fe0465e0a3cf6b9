#include "tvx/transvectant.hpp"
#include "tvx/wigner.hpp"

namespace tvx {

namespace {

// (a + b − c) for twice-values, as an integer; throws if not integral.
int defect(int a, int b, int c) {
  int t = a + b - c;
  if (t % 2) throw Error("not a triad");
  return t / 2;
}

void require_spin(HalfInt j) {
  if (j.twice < 0) throw Error("negative spin");
}

// Whether m ∈ M_j.
bool in_range(HalfInt j, HalfInt m) { return (j.twice - m.twice) % 2 == 0 && -j.twice <= m.twice && m.twice <= j.twice; }

int parity(long k) { return k % 2 ? -1 : 1; }

}  // namespace

bool is_triad(HalfInt j1, HalfInt j2, HalfInt j) {
  if (j1.twice < 0 || j2.twice < 0 || j.twice < 0) return false;
  if ((j1.twice + j2.twice + j.twice) % 2) return false;
  return j1.twice + j2.twice >= j.twice && j2.twice + j.twice >= j1.twice && j.twice + j1.twice >= j2.twice;
}

bool is_stretched(HalfInt j1, HalfInt j2, HalfInt j) {
  if (!is_triad(j1, j2, j)) return false;
  return j1.twice + j2.twice == j.twice || j2.twice + j.twice == j1.twice || j.twice + j1.twice == j2.twice;
}

Rational form_inner_product(const MultiForm& f, const MultiForm& g) {
  Rational sum(0);
  auto it = g.terms().begin();
  for (const auto& [mono, c] : f.terms()) {
    while (it != g.terms().end() && it->first < mono) ++it;
    if (it == g.terms().end()) break;
    if (it->first != mono) continue;
    Integer weight(1);
    for (Pair p : kAllPairs) weight *= binomial(mono.degree(p), mono.get(p, 0));
    sum += c * it->second / Rational(weight);
  }
  return sum;
}

QuadraticSurd coupling_coefficient(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m) {
  if (!is_triad(j1, j2, j)) throw Error("not a triad");
  if (!in_range(j1, m1) || !in_range(j2, m2) || !in_range(j, m)) throw Error("magnetic label out of range");
  if (m1.twice + m2.twice != m.twice) return QuadraticSurd();

  const int a = j1.twice, b = j2.twice;  // orders m, n of the two factors
  const int r = defect(j1.twice, j2.twice, j.twice);
  const int lo = (j.twice - m.twice) / 2, lo1 = (j1.twice - m1.twice) / 2, lo2 = (j2.twice - m2.twice) / 2;

  MultiForm basis = MultiForm::monomial(1, {{Pair::z, {lo, j.twice - lo}}});
  MultiForm image = section_iota(BinaryForm(Pair::z, basis), a, b, r);

  Monomial target;
  target.set(Pair::x, 0, lo1);
  target.set(Pair::x, 1, a - lo1);
  target.set(Pair::y, 0, lo2);
  target.set(Pair::y, 1, b - lo2);
  Rational c = image.coeff(target);
  if (c == 0) return QuadraticSurd();

  Integer b1 = binomial(a, lo1), b2 = binomial(b, lo2), bj = binomial(j.twice, lo);
  int sign = parity((j.twice + m.twice) / 2 + (j1.twice + m1.twice) / 2 + (j2.twice + m2.twice) / 2);
  QuadraticSurd root = QuadraticSurd::sqrt_of(Rational(b1 * b2 * bj) / factor_g(a, b, r));
  return QuadraticSurd(sign * c / Rational(b1 * b2)) * root;
}

QuadraticSurd threej(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m) {
  if (!is_triad(j1, j2, j)) throw Error("not a triad");
  if (!in_range(j1, m1) || !in_range(j2, m2) || !in_range(j, m)) throw Error("magnetic label out of range");
  if (m1.twice + m2.twice + m.twice != 0) return QuadraticSurd();
  int sign = parity((j1.twice - j2.twice - m.twice) / 2);
  QuadraticSurd c = coupling_coefficient(j1, j2, j, m1, m2, HalfInt{-m.twice});
  return QuadraticSurd(Rational(sign)) * QuadraticSurd::sqrt_of(make_rational(1, j.twice + 1)) * c;
}

QuadraticSurd sixj(const SixJArray& arr) {
  const HalfInt j1 = arr[0], j2 = arr[1], j12 = arr[2], j3 = arr[3], big = arr[4], j23 = arr[5];
  for (HalfInt h : arr) require_spin(h);
  if (!is_triad(j1, j2, j12) || !is_triad(j2, j3, j23) || !is_triad(j12, j3, big) || !is_triad(j1, j23, big))
    throw Error("not a triad");
  const int t1 = j1.twice, t2 = j2.twice, t3 = j3.twice, t12 = j12.twice, t23 = j23.twice, tJ = big.twice;

  MultiForm f = MultiForm::monomial(1, {{Pair::z, {tJ, 0}}});
  f = polarize(f, Pair::z, Pair::u, defect(t1, tJ, t23));
  f = polarize(f, Pair::z, Pair::y, defect(t23, tJ, t1));
  f = bracket_pow(Pair::u, Pair::y, defect(t1, t23, tJ)) * drop_pair(f, Pair::z);
  f = polarize(f, Pair::y, Pair::v, defect(t2, t23, t3));
  f = polarize(f, Pair::y, Pair::w, defect(t3, t23, t2));
  f = bracket_pow(Pair::v, Pair::w, defect(t2, t3, t23)) * drop_pair(f, Pair::y);
  f = omega(f, Pair::u, Pair::v, defect(t1, t2, t12));
  f = substitute_pair(substitute_pair(f, Pair::u, Pair::x), Pair::v, Pair::x);
  f = omega(f, Pair::x, Pair::w, defect(t12, t3, tJ));
  f = substitute_pair(substitute_pair(f, Pair::x, Pair::z), Pair::w, Pair::z);

  Monomial target;
  target.set(Pair::z, 0, tJ);
  auto alpha = f.scalar_multiple_of(target);
  if (!alpha) throw Error("operator chain inconsistent");

  Integer p1 = factorial(defect(t1, t12, t2)) * factorial(defect(t2, t12, t1)) * factorial(defect(t12, tJ, t3)) *
               factorial(defect(t3, tJ, t12));
  Integer p2 = factorial(defect(t1, t23, tJ)) * factorial(defect(t1, tJ, t23)) * factorial(defect(t23, tJ, t1)) *
               factorial(defect(t2, t3, t23)) * factorial(defect(t2, t23, t3)) * factorial(defect(t3, t23, t2)) *
               factorial(defect(t1, t2, t12)) * factorial(defect(t12, t3, tJ));
  Integer p3 = factorial((t1 + t2 + t12) / 2 + 1) * factorial((t2 + t3 + t23) / 2 + 1) *
               factorial((t1 + t23 + tJ) / 2 + 1) * factorial((t12 + t3 + tJ) / 2 + 1);
  int sign = parity((t1 + t2 + t3 + tJ) / 2);
  Rational scale = *alpha * Rational(sign * (tJ + 1));
  return QuadraticSurd(scale) * QuadraticSurd::sqrt_of(make_rational(p1, p2 * p3));
}

}  // namespace tvx
