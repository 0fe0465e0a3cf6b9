#include <doctest.h>

#include "tvx/linalg.hpp"
#include "tvx/multiform.hpp"
#include "tvx/multiform_json.hpp"
#include "tvx/random.hpp"

using namespace tvx;

namespace {

MultiForm x1() { return MultiForm::monomial(1, {{Pair::x, {1, 0}}}); }
MultiForm x2() { return MultiForm::monomial(1, {{Pair::x, {0, 1}}}); }
MultiForm y1() { return MultiForm::monomial(1, {{Pair::y, {1, 0}}}); }
MultiForm y2() { return MultiForm::monomial(1, {{Pair::y, {0, 1}}}); }

// Dense random form of order (mx, my) in the pairs x, y.
MultiForm random_xy(CounterRng& rng, int mx, int my) {
  Orders orders{};
  orders[index_of(Pair::x)] = mx;
  orders[index_of(Pair::y)] = my;
  TermAccumulator acc(orders);
  for (int i = 0; i <= mx; ++i)
    for (int j = 0; j <= my; ++j) {
      Monomial mono;
      mono.set(Pair::x, 0, mx - i);
      mono.set(Pair::x, 1, i);
      mono.set(Pair::y, 0, my - j);
      mono.set(Pair::y, 1, j);
      acc.add(mono, rng.small_rational());
    }
  return std::move(acc).finish();
}

// c_x^m for a linear form c = (c1, c2).
MultiForm linear_power(Pair p, const Rational& c1, const Rational& c2, int m) {
  MultiForm l = MultiForm::monomial(c1, {{p, {1, 0}}}) + MultiForm::monomial(c2, {{p, {0, 1}}});
  return pow(l, static_cast<unsigned>(m));
}

}  // namespace

TEST_CASE("rational formatting and parsing") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(parse_rational(" -3/2 ") == make_rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(6) == 720);
}

TEST_CASE("omega on small inputs") {
  CHECK(omega(MultiForm::constant(1, {Pair::x, Pair::y}), Pair::x, Pair::y).is_zero());
  MultiForm f = x1() * y2();
  MultiForm w = omega(f, Pair::x, Pair::y);
  CHECK(w == MultiForm::constant(1, {Pair::x, Pair::y}));
}

TEST_CASE("omega is antisymmetric and its closed power matches iteration") {
  CounterRng rng(7);
  for (int t = 0; t < 5; ++t) {
    MultiForm f = random_xy(rng, 3, 2);
    CHECK(omega(f, Pair::x, Pair::y) == -omega(f, Pair::y, Pair::x));
    CHECK(omega(f, Pair::x, Pair::y, 2) == omega(omega(f, Pair::x, Pair::y), Pair::x, Pair::y));
  }
}

TEST_CASE("omega^r on the bracket power times linear powers") {
  // Ω^r (xy)^r c_x^{m−r} c_y^{n−r}, y → x, is c_x^{m+n−2r} / h(m,n;r).
  // m = n = r = 1 with c = (1, 1): the result is 2 = 1/h(1,1;1).
  MultiForm g = omega(bracket(Pair::x, Pair::y), Pair::x, Pair::y);
  CHECK(g == MultiForm::constant(2, {Pair::x, Pair::y}));
}

TEST_CASE("polarization") {
  MultiForm f = x1() * x2();
  MultiForm p = polarize(f, Pair::x, Pair::y, 2);
  CHECK(p == MultiForm::monomial(2, {{Pair::x, {0, 0}}, {Pair::y, {1, 1}}}));
  CHECK(polarize(f, Pair::x, Pair::y, 3).is_zero());
}

TEST_CASE("polarization identity on linear powers") {
  // (y·∂x)^ℓ c_x^m = m!/(m−ℓ)! c_x^{m−ℓ} c_y^ℓ
  CounterRng rng(11);
  for (int m = 0; m <= 6; ++m)
    for (int l = 0; l <= m; ++l) {
      Rational c1 = rng.small_rational(), c2 = rng.small_rational();
      MultiForm lhs = polarize(linear_power(Pair::x, c1, c2, m), Pair::x, Pair::y, l);
      MultiForm rhs = linear_power(Pair::x, c1, c2, m - l) * linear_power(Pair::y, c1, c2, l) *
                      Rational(factorial(m) / factorial(m - l));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("bracket and substitution") {
  MultiForm b = bracket(Pair::x, Pair::y);
  CHECK(evaluate(b, {{Pair::x, {1, 0}}, {Pair::y, {0, 1}}}) == 1);
  CHECK_THROWS_AS(bracket(Pair::x, Pair::x), Error);
  CHECK(substitute_pair(b, Pair::y, Pair::x).is_zero());
  CHECK(substitute_pair(y1() * y1(), Pair::y, Pair::x) == x1() * x1());
  CHECK(bracket_pow(Pair::x, Pair::y, 3) == pow(b, 3));
}

TEST_CASE("evaluate, exact_divide and ring laws") {
  CHECK(evaluate(x1() * y2(), {{Pair::x, {2, 3}}, {Pair::y, {5, 7}}}) == 14);
  MultiForm num = x1() * x1() - x2() * x2();
  CHECK(exact_divide(num, x1() - x2()) == x1() + x2());
  CHECK_THROWS_WITH_AS(exact_divide(x1() * x1() + x2() * x2(), x1() - x2()), "inexact division", Error);

  CounterRng rng(3);
  for (int t = 0; t < 10; ++t) {
    MultiForm f = random_xy(rng, 2, 1), g = random_xy(rng, 2, 1), h = random_xy(rng, 1, 2);
    Assignment pt{{Pair::x, {rng.small_rational(), rng.small_rational()}},
                  {Pair::y, {rng.small_rational(), rng.small_rational()}}};
    CHECK(evaluate(f * h, pt) == evaluate(f, pt) * evaluate(h, pt));
    CHECK(evaluate(f + g, pt) == evaluate(f, pt) + evaluate(g, pt));
    CHECK(exact_divide(f * h, h) == f);
    CHECK(exact_divide(h, h) == MultiForm::constant(1, {Pair::x, Pair::y}));
  }
}

TEST_CASE("declared orders are enforced") {
  CHECK_THROWS_AS(x1() + x1() * x1(), Error);
  CounterRng rng(5);
  MultiForm f = random_xy(rng, 3, 2);
  MultiForm g = omega(f, Pair::x, Pair::y);
  CHECK(g.order(Pair::x) == 2);
  CHECK(g.order(Pair::y) == 1);
  for (const auto& [mono, c] : g.terms()) {
    CHECK(mono.degree(Pair::x) == 2);
    CHECK(mono.degree(Pair::y) == 1);
    CHECK(c != 0);
  }
  CHECK_THROWS_AS(omega(x1(), Pair::x, Pair::y), Error);
}

TEST_CASE("change of variables") {
  std::array<std::array<Rational, 2>, 2> m{{{Rational(1), Rational(2)}, {Rational(0), Rational(1)}}};
  // x1 → x1 + 2 x2, x2 → x2
  CHECK(transform_pair(x1() * x2(), Pair::x, m) == x1() * x2() + x2() * x2() * Rational(2));
}

TEST_CASE("json round trip keeps canonical order") {
  CounterRng rng(9);
  MultiForm f = random_xy(rng, 2, 3);
  auto j = to_json(f);
  CHECK(multiform_from_json(j) == f);
  CHECK(to_json(multiform_from_json(j)).dump() == j.dump());
}

TEST_CASE("linear algebra") {
  Matrix a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  auto null = nullspace(a);
  REQUIRE(null.size() == 1);
  auto v = null.front();
  for (std::size_t r = 0; r < 3; ++r) CHECK(a(r, 0) * v[0] + a(r, 1) * v[1] + a(r, 2) * v[2] == 0);
  Matrix b = Matrix::from_rows({{2, 1}, {1, 1}});
  CHECK(b * inverse(b) == Matrix::identity(2));
  std::vector<Rational> w{make_rational(-1, 2), make_rational(3, 4)};
  make_primitive(w);
  CHECK(w == std::vector<Rational>{Rational(2), Rational(-3)});
  CHECK(kron(Matrix::identity(2), b).rows() == 4);
}
