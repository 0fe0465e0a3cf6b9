#include <doctest.h>

#include "tvx/random.hpp"
#include "tvx/syzygy.hpp"
#include "tvx/wigner.hpp"

using namespace tvx;

namespace {

HalfInt h(int twice) { return HalfInt{twice}; }

// n! for an integer given as twice its value.
Integer fact2(int twice) {
  REQUIRE(twice % 2 == 0);
  REQUIRE(twice >= 0);
  return factorial(twice / 2);
}

Rational delta_sq(int a, int b, int c) {
  return Rational(fact2(a + b - c) * fact2(a - b + c) * fact2(-a + b + c)) / Rational(fact2(a + b + c + 2));
}

bool triad2(int a, int b, int c) {
  return a + b >= c && a + c >= b && b + c >= a && (a + b + c) % 2 == 0;
}

// Racah's single sum for the 6-j symbol, returned as (sum, radicand²) with value sum·sqrt(radicand).
std::pair<Rational, Rational> racah_sixj(int j1, int j2, int j3, int j4, int j5, int j6) {
  Rational rad = delta_sq(j1, j2, j3) * delta_sq(j1, j5, j6) * delta_sq(j4, j2, j6) * delta_sq(j4, j5, j3);
  std::array<int, 4> a{j1 + j2 + j3, j1 + j5 + j6, j4 + j2 + j6, j4 + j5 + j3};
  std::array<int, 3> b{j1 + j2 + j4 + j5, j2 + j3 + j5 + j6, j3 + j1 + j6 + j4};
  int lo = *std::max_element(a.begin(), a.end()), hi = *std::min_element(b.begin(), b.end());
  Rational sum(0);
  for (int t = lo; t <= hi; t += 2) {
    Integer den = 1;
    for (int x : a) den *= fact2(t - x);
    for (int x : b) den *= fact2(x - t);
    sum += Rational(fact2(t + 2) * sign_of(t / 2)) / Rational(den);
  }
  return {sum, rad};
}

// Racah's closed form for the 3-j symbol, as (sum, radicand).
std::pair<Rational, Rational> racah_threej(int j1, int j2, int j3, int m1, int m2, int m3) {
  if (m1 + m2 + m3 != 0) return {0, 1};
  Rational rad = delta_sq(j1, j2, j3) * Rational(fact2(j1 + m1) * fact2(j1 - m1) * fact2(j2 + m2) * fact2(j2 - m2) *
                                                 fact2(j3 + m3) * fact2(j3 - m3));
  Rational sum(0);
  for (int k = 0; k <= j1 + j2 + j3; k += 2) {
    std::array<int, 6> d{k, j3 - j2 + k + m1, j3 - j1 + k - m2, j1 + j2 - j3 - k, j1 - k - m1, j2 - k + m2};
    if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) continue;
    Integer den = 1;
    for (int x : d) den *= fact2(x);
    sum += Rational(sign_of(k / 2)) / Rational(den);
  }
  sum *= sign_of((j1 - j2 - m3) / 2);
  return {sum, rad};
}

void check_matches(const QuadraticSurd& s, const std::pair<Rational, Rational>& oracle) {
  auto [sum, rad] = oracle;
  CHECK(s.squared() == sum * sum * rad);
  CHECK(s.sign() == sgn(sum));
}

}  // namespace

TEST_CASE("half integers") {
  CHECK(parse_halfint("3/2") == h(3));
  CHECK(parse_halfint("1.5") == h(3));
  CHECK(parse_halfint("-1/2") == h(-1));
  CHECK(parse_halfint("2") == h(4));
  CHECK(to_string(h(3)) == "3/2");
  CHECK(to_string(h(4)) == "2");
  CHECK_THROWS_AS(parse_halfint("1/3"), Error);
}

TEST_CASE("quadratic surds") {
  auto [sq, rest] = squarefree_split(Integer(72));
  CHECK(sq == 6);
  CHECK(rest == 2);
  QuadraticSurd s = QuadraticSurd::sqrt_of(make_rational(8, 3));
  CHECK(s.squared() == make_rational(8, 3));
  CHECK(to_string(s) == "2/3 * sqrt(6)");
  CHECK((s * s).squared() == make_rational(64, 9));
  CHECK((s - s).squared() == 0);
}

TEST_CASE("triads") {
  CHECK(is_triad(h(1), h(1), h(2)));
  CHECK(is_stretched(h(1), h(1), h(2)));
  CHECK_FALSE(is_triad(h(1), h(1), h(1)));
  CHECK(is_triad(h(2), h(2), h(2)));
  CHECK_FALSE(is_stretched(h(2), h(2), h(2)));
}

TEST_CASE("coupling coefficients") {
  CHECK(coupling_coefficient(h(2), h(2), h(2), h(2), h(0), h(0)).squared() == 0);
  CHECK_THROWS_AS(coupling_coefficient(h(1), h(1), h(1), h(1), h(0), h(1)), Error);
  for (int j1 = 0; j1 <= 4; ++j1)
    for (int j2 = 0; j2 <= 4; ++j2)
      for (int j = std::abs(j1 - j2); j <= j1 + j2; j += 2) {
        // Brussaard: the coefficient at m₁ = j₁, m = j is positive.
        CHECK(coupling_coefficient(h(j1), h(j2), h(j), h(j1), h(j - j1), h(j)).sign() > 0);
        for (int m = -j; m <= j; m += 2) {
          Rational norm(0);
          for (int m1 = -j1; m1 <= j1; m1 += 2) {
            int m2 = m - m1;
            if (std::abs(m2) > j2) continue;
            norm += coupling_coefficient(h(j1), h(j2), h(j), h(m1), h(m2), h(m)).squared();
          }
          CHECK(norm == 1);
        }
      }
}

TEST_CASE("3-j symbols against Racah's closed form") {
  CHECK(threej(h(1), h(1), h(2), h(1), h(1), h(-2)).squared() == make_rational(1, 3));
  CHECK(threej(h(2), h(2), h(2), h(2), h(0), h(0)).squared() == 0);
  for (int j1 = 0; j1 <= 4; ++j1)
    for (int j2 = 0; j2 <= 4; ++j2)
      for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; j3 += 2)
        for (int m1 = -j1; m1 <= j1; m1 += 2)
          for (int m2 = -j2; m2 <= j2; m2 += 2) {
            int m3 = -m1 - m2;
            if (std::abs(m3) > j3) continue;
            check_matches(threej(h(j1), h(j2), h(j3), h(m1), h(m2), h(m3)), racah_threej(j1, j2, j3, m1, m2, m3));
          }
}

TEST_CASE("6-j symbols against Racah's single sum") {
  CHECK(to_string(sixj({h(0), h(0), h(0), h(0), h(0), h(0)})) == "1/1 * sqrt(1)");
  int checked = 0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d)
          for (int e = 0; e <= 3; ++e)
            for (int f = 0; f <= 3; ++f) {
              if (!triad2(a, b, c) || !triad2(a, e, f) || !triad2(d, b, f) || !triad2(d, e, c)) continue;
              check_matches(sixj({h(a), h(b), h(c), h(d), h(e), h(f)}), racah_sixj(a, b, c, d, e, f));
              ++checked;
            }
  CHECK(checked > 50);
  CHECK_THROWS_AS(sixj({h(1), h(1), h(1), h(0), h(0), h(0)}), Error);
}

TEST_CASE("9-j routes agree on small arrays") {
  int checked = 0;
  CounterRng rng(41);
  while (checked < 60) {
    NineJArray a;
    for (auto& row : a.j)
      for (auto& e : row) e = h(static_cast<int>(rng.uniform(0, 4)));
    if (!a.valid()) continue;
    ++checked;
    QuadraticSurd op = ninej_operator(a), ts = ninej_triple_sum(a);
    CHECK(op == ts);
    CHECK(ninej_triple_sum(a.transposed()) == ts);
    CHECK(ninej_symmetry_check(a).pass);
  }
  NineJArray zero;
  CHECK(to_string(ninej_triple_sum(zero)) == "1/1 * sqrt(1)");
  NineJArray bad = parse_ninej("1 1 3; 0 0 0; 1 1 3");
  CHECK_FALSE(bad.valid());
  CHECK_THROWS_AS(ninej_triple_sum(bad), Error);
  CHECK(parse_ninej("1/2 1/2 1; 1/2 1/2 0; 1 1 1") == parse_ninej(to_string(parse_ninej("1/2 1/2 1; 1/2 1/2 0; 1 1 1"))));
}

TEST_CASE("9-j with two zero entries reduces to a 6-j") {
  // {a b c; d e c; f f 0} = (−1)^{b+c+d+f} {a b c; e d f} / sqrt((2c+1)(2f+1))
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d)
          for (int e = 0; e <= 3; ++e)
            for (int f = 0; f <= 3; ++f) {
              if (!triad2(a, b, c) || !triad2(d, e, c) || !triad2(a, d, f) || !triad2(b, e, f)) continue;
              NineJArray arr;
              arr.j = {{{h(a), h(b), h(c)}, {h(d), h(e), h(c)}, {h(f), h(f), h(0)}}};
              auto [sum, rad] = racah_sixj(a, b, c, e, d, f);
              Rational scale = Rational(sign_of((b + c + d + f) / 2));
              QuadraticSurd v = ninej_triple_sum(arr);
              CHECK(v.squared() == sum * sum * rad / Rational((c + 1) * (f + 1)));
              CHECK(v.sign() == sgn(sum * scale));
            }
}

TEST_CASE("kappa through the 9-j symbol") {
  for (auto [m, n, r] : std::vector<std::array<int, 3>>{{3, 2, 2}, {4, 3, 3}, {5, 3, 2}, {5, 5, 4}})
    for (const auto& p : pi_set(m, n, r))
      for (int i = 0; i <= r; ++i)
        for (int j = 0; i + j <= r; ++j) CHECK(kappa_via_ninej(m, n, r, i, j, p.a, p.b) == kappa(m, n, r, i, j, p));
  for (auto [m, n, r] : std::vector<std::array<int, 3>>{{5, 3, 2}, {7, 5, 4}, {6, 6, 4}}) {
    NineJArray b = kappa_ninej_array_rearranged(m, n, r, 0, r, 0, 0);
    CHECK(b.valid());
    CHECK(ninej_triple_sum_support(b) == 1);
    CHECK(kappa_ninej_array(m, n, r, 0, r, 0, 0).valid());
  }
}
