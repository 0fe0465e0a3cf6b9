#include <doctest.h>

#include "tvx/linalg.hpp"
#include "tvx/random.hpp"
#include "tvx/syzygy.hpp"
#include "tvx/transvectant.hpp"

using namespace tvx;

namespace {

BinaryForm form(std::vector<Rational> c) { return BinaryForm::from_coeffs(Pair::x, c); }

// Copies of S_k in ∧²S_m ⊗ ∧²S_n, with ∧²S_m = ⊕_a S_{2(m−1)−4a} and the Clebsch–Gordan rule.
int wedge_multiplicity(int m, int n, int k) {
  int count = 0;
  for (int p = 2 * (m - 1); p >= 0; p -= 4)
    for (int q = 2 * (n - 1); q >= 0; q -= 4)
      if (std::abs(p - q) <= k && k <= p + q && (p + q - k) % 2 == 0) ++count;
  return count;
}

std::vector<Rational> as_vector(const SyzygyTable& t, const std::vector<std::pair<int, int>>& keys) {
  std::vector<Rational> v;
  for (auto [i, j] : keys) v.push_back(t.at(i, j));
  return v;
}

}  // namespace

TEST_CASE("lattice points") {
  CHECK(pi_set(5, 3, 2) == std::vector<LatticePoint>{{0, 0}});
  CHECK(pi_set(5, 3, 3) == std::vector<LatticePoint>{{0, 0}});
  CHECK(pi_set(6, 6, 4) == std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}});
  CHECK_THROWS_WITH_AS(pi_set(5, 3, 1), "no quadratic syzygies below weight 2", Error);
}

TEST_CASE("lattice count matches the exterior square decomposition") {
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= 6; ++n)
      for (int r = 2; r <= std::min(m, n); ++r)
        CHECK(static_cast<int>(pi_set(m, n, r).size()) == wedge_multiplicity(m, n, 2 * (m + n - r)));
}

TEST_CASE("kappa against the operator chain on small grids") {
  for (auto [m, n, r] : std::vector<std::array<int, 3>>{{3, 2, 2}, {4, 3, 3}, {4, 4, 4}, {5, 5, 4}})
    for (const auto& p : pi_set(m, n, r))
      for (int i = 0; i <= r; ++i)
        for (int j = 0; i + j <= r; ++j) {
          Rational k = kappa(m, n, r, i, j, p);
          CHECK(k == kappa_oracle(m, n, r, i, j, p));
          CHECK(kappa(m, n, r, j, i, p) == k * Rational(sign_of(r - i - j)));
        }
  CHECK_THROWS_AS(kappa(5, 3, 2, 2, 1, {0, 0}), Error);
  CHECK_THROWS_AS(kappa(5, 3, 2, 0, 0, {1, 0}), Error);
}

TEST_CASE("stretched coefficient has one triple") {
  for (auto [m, n, r] : std::vector<std::array<int, 3>>{{5, 3, 2}, {5, 3, 3}, {7, 5, 4}, {8, 6, 5}, {6, 6, 4}}) {
    CHECK(kappa_support_size(m, n, r, 0, r, {0, 0}) == 1);
    CHECK(kappa(m, n, r, 0, r, {0, 0}) != 0);
  }
}

TEST_CASE("tables reproduce the displayed syzygies") {
  SyzygyTable t = vartheta_table(5, 3, 2, {0, 0});
  t = t.scaled(Rational(-1) / t.at(0, 2));
  CHECK(t.at(0, 0) == make_rational(21, 8));
  CHECK(t.at(0, 1) == make_rational(21, 16));
  CHECK(t.at(1, 1) == make_rational(315, 256));

  t = vartheta_table(5, 3, 3, {0, 0});
  t = t.scaled(Rational(-1) / t.at(0, 3));
  CHECK(t.at(0, 1) == make_rational(20, 3));
  CHECK(t.at(0, 2) == make_rational(20, 9));
  CHECK(t.at(1, 2) == make_rational(25, 14));
  CHECK(t.at(0, 0) == 0);
  CHECK(t.at(1, 1) == 0);

  t = vartheta_table(7, 5, 4, {0, 1});
  t = t.scaled(Rational(1) / t.at(0, 0));
  std::vector<Rational> want{1,
                             make_rational(8, 3),
                             make_rational(54, 55),
                             make_rational(-1, 6),
                             make_rational(-10, 63),
                             make_rational(-7, 12),
                             make_rational(63, 55),
                             make_rational(49, 72),
                             make_rational(-1512, 3025)};
  CHECK(as_vector(t, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 1}, {1, 2}, {1, 3}, {2, 2}}) == want);

  CHECK(vartheta_table(8, 6, 5, {1, 0}).at(0, 5) == make_rational(-2, 63));
  CHECK(vartheta_table_oracle(7, 5, 4, {0, 1}).coeffs == vartheta_table(7, 5, 4, {0, 1}).coeffs);
}

TEST_CASE("tables for distinct lattice points are independent") {
  for (int m = 4; m <= 8; ++m)
    for (int n = 4; n <= m; ++n)
      for (int r = 4; r <= n; ++r) {
        auto points = pi_set(m, n, r);
        std::vector<std::pair<int, int>> keys;
        for (const auto& [k, v] : vartheta_table(m, n, r, points.front()).coeffs) keys.push_back(k);
        std::vector<std::vector<Rational>> rows;
        for (const auto& p : points) rows.push_back(as_vector(vartheta_table(m, n, r, p), keys));
        CHECK(rank(Matrix::from_rows(rows)) == points.size());
      }
}

TEST_CASE("closed form syzygy") {
  SyzygyTable t = closed_form_table(2, 2, 2);
  t = t.scaled(Rational(-1) / t.at(0, 2));
  CHECK(t.at(1, 1) == make_rational(3, 2));
  CHECK(t.at(0, 0) == 3);
  CHECK(t.at(0, 1) == 0);
  for (int m = 2; m <= 10; ++m)
    for (int n = 2; n <= 10; ++n)
      for (int r = 2; r <= std::min(m, n); ++r) {
        CHECK(closed_form_table(m, n, r).at(0, r) != 0);
        CHECK(vartheta_table(m, n, r, {0, 0}).at(0, r) != 0);
        CHECK(Rational(binomial(m + n - r + 1, r)) > Rational(binomial(m, r) + binomial(n, r)));
      }
  for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 4}, {5, 3}, {7, 5}})
    for (int r = 2; r <= n; ++r) CHECK(verify_table(closed_form_table(m, n, r), 3, 17).pass);
}

TEST_CASE("second and third transvectant formulas") {
  U2U3 f = u2_u3_formulas(5, 3);
  CHECK(f.z == std::array<Rational, 3>{make_rational(21, 8), make_rational(315, 256), make_rational(21, 16)});
  REQUIRE(f.w.has_value());
  CHECK(*f.w == std::array<Rational, 3>{make_rational(20, 3), make_rational(20, 9), make_rational(25, 14)});
  for (int m = 2; m <= 8; ++m) CHECK(u2_u3_formulas(m, m).z[2] == 0);
  CHECK_FALSE(u2_u3_formulas(4, 2).w.has_value());
}

TEST_CASE("randomized verification") {
  SyzygyTable t = vartheta_table(5, 3, 2, {0, 0});
  CHECK(verify_table(t, 5, 42).pass);
  CHECK(verify_table(t, 1, 0, true).pass);
  SyzygyTable bumped = t;
  bumped.coeffs[{0, 0}] += 1;
  TableVerdict bad = verify_table(bumped, 5, 42);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.residual.has_value());
  CHECK_FALSE(bad.residual->is_zero());
  SyzygyTable zero = t.scaled(0);
  CHECK_FALSE(verify_table(zero, 5, 42).pass);
  for (const auto& p : pi_set(6, 6, 4)) CHECK(verify_table(vartheta_table(6, 6, 4, p), 5, 42).pass);
}

TEST_CASE("reconstruction from u0 and u1") {
  CounterRng rng(31);
  BinaryForm a = random_binary_form(rng, 5), b = random_binary_form(rng, 3);
  auto rec = reconstruct(transvect(a, b, 0), transvect(a, b, 1), 5, 3);
  REQUIRE(rec.size() == 2);
  CHECK(rec[0] == transvect(a, b, 2));
  CHECK(rec[1] == transvect(a, b, 3));

  BinaryForm q1 = random_binary_form(rng, 2), q2 = random_binary_form(rng, 2);
  auto rq = reconstruct(transvect(q1, q2, 0), transvect(q1, q2, 1), 2, 2);
  REQUIRE(rq.size() == 1);
  CHECK(rq[0] == transvect(q1, q2, 2));

  BinaryForm c = random_binary_form(rng, 4), d = c * Rational(3);
  CHECK(transvect(c, d, 1).is_zero());
  auto rp = reconstruct(transvect(c, d, 0), transvect(c, d, 1), 4, 4);
  for (int r = 2; r <= 4; ++r) CHECK(rp[r - 2] == transvect(c, d, r));

  CHECK_THROWS_AS(reconstruct(random_binary_form(rng, 8), random_binary_form(rng, 6), 5, 3), Error);
}

TEST_CASE("quadratic pair identities") {
  CounterRng rng(32);
  for (int t = 0; t < 5; ++t) {
    BinaryForm a = random_binary_form(rng, 2), b = random_binary_form(rng, 2);
    CHECK(segre22_identity_check(a, b).pass);
    CHECK(minimal_equation_u1_check(a, b).pass);
  }
  BinaryForm a = random_binary_form(rng, 2);
  CHECK(segre22_identity_check(a, a).pass);
  CHECK(minimal_equation_u1_check(a, a).pass);
  CHECK(segre22_identity_check(form({1, 0, 0}), form({0, 0, 1})).pass);
  CHECK(minimal_equation_u1_check(form({0, 1, 0}), form({1, 0, 1})).pass);
  CHECK(segre22_identity_check(form({1, 0, 0}), form({0, 0, 1})).checks.size() == 9);
}

TEST_CASE("table json round trip") {
  SyzygyTable t = vartheta_table(7, 5, 4, {0, 1});
  SyzygyTable back = syzygy_table_from_json(to_json(t));
  CHECK(back.coeffs == t.coeffs);
  CHECK(back.point == t.point);
  SyzygyTable c = syzygy_table_from_json(to_json(closed_form_table(5, 3, 3)));
  CHECK_FALSE(c.point.has_value());
}
