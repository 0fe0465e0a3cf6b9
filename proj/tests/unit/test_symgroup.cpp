#include <doctest.h>

#include "tvx/random.hpp"
#include "tvx/symgroup.hpp"

using namespace tvx;

namespace {

Partition P(std::vector<int> parts) { return Partition{std::move(parts)}; }

Permutation random_permutation(CounterRng& rng, int d) {
  Permutation p(d);
  for (int i = 0; i < d; ++i) p[i] = i;
  for (int i = d - 1; i > 0; --i) std::swap(p[i], p[rng.uniform(0, i)]);
  return p;
}

Rational trace(const Matrix& m) {
  Rational t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

TEST_CASE("partitions and tableaux") {
  CHECK(parse_partition("3,2") == P({3, 2}));
  CHECK(parse_partition("(2, 1, 1)") == P({2, 1, 1}));
  CHECK_THROWS_AS(parse_partition("2,3"), Error);
  CHECK(partitions_of(5).size() == 7);

  auto t32 = standard_tableaux(P({3, 2}));
  REQUIRE(t32.size() == 5);
  std::vector<std::string> want{"1 2 3/4 5", "1 2 4/3 5", "1 2 5/3 4", "1 3 4/2 5", "1 3 5/2 4"};
  for (std::size_t k = 0; k < 5; ++k) CHECK(t32[k] == parse_tableau(want[k]));
  CHECK(standard_tableaux(P({5})).size() == 1);
  CHECK(standard_tableaux(P({4, 1})).size() == 4);
  CHECK(hook_length_dimension(P({4, 1})) == 4);
}

TEST_CASE("dimensions and characters") {
  for (int d = 1; d <= 7; ++d) {
    Integer total = 0;
    for (const auto& p : partitions_of(d)) {
      Integer dim = hook_length_dimension(p);
      CHECK(dim == static_cast<long>(standard_tableaux(p).size()));
      total += dim * dim;
      CHECK(character(p, P(std::vector<int>(d, 1))) == dim);
      if (d >= 2) {
        std::vector<int> rho{2};
        rho.insert(rho.end(), d - 2, 1);
        CHECK(trace(generator_matrices(p).transposition.matrix) == Rational(character(p, P(rho))));
        CHECK(trace(generator_matrices(p).long_cycle.matrix) == Rational(character(p, P({d}))));
      }
    }
    CHECK(total == factorial(d));
  }
}

TEST_CASE("trivial and sign representations") {
  for (int d = 2; d <= 5; ++d) {
    auto triv = generator_matrices(P({d}));
    CHECK(triv.transposition.matrix == Matrix::identity(1));
    CHECK(triv.long_cycle.matrix == Matrix::identity(1));
    auto sign = generator_matrices(P(std::vector<int>(d, 1)));
    CHECK(sign.transposition.matrix(0, 0) == -1);
    CHECK(sign.long_cycle.matrix(0, 0) == sign_of(d - 1));
  }
}

TEST_CASE("natural representation is a homomorphism") {
  CounterRng rng(51);
  for (const auto& shape : {P({3, 2}), P({4, 1}), P({2, 2, 1}), P({3, 1, 1})}) {
    NaturalRepresentation rep(shape);
    for (int t = 0; t < 10; ++t) {
      Permutation g = random_permutation(rng, 5), h = random_permutation(rng, 5);
      // Row-vector convention: Q(g∘h) = Q(h)·Q(g) or Q(g)·Q(h) depending on composition order;
      // one of them must hold for every pair.
      Matrix gh = rep.matrix(compose(g, h));
      CHECK((gh == rep.matrix(g) * rep.matrix(h) || gh == rep.matrix(h) * rep.matrix(g)));
      CHECK(rep.matrix(inverse(g)) * rep.matrix(g) == Matrix::identity(rep.dimension()));
    }
  }
}

TEST_CASE("Kronecker multiplicities") {
  CHECK(multiplicity(P({3, 2}), P({3, 2}), P({4, 1})) == 1);
  CHECK(multiplicity(P({3, 1}), P({2, 2}), P({2, 1, 1})) == 1);
  CHECK(multiplicity(P({3, 1, 1}), P({3, 1, 1}), P({4, 1})) == 1);
  CHECK_THROWS_AS(multiplicity(P({3, 1}), P({3, 2}), P({4, 1})), Error);
  for (int d = 3; d <= 5; ++d) {
    auto parts = partitions_of(d);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        CHECK(multiplicity(a, b, P({d})) == (a == b ? 1 : 0));
        for (const auto& c : parts) {
          Integer k = multiplicity(a, b, c);
          CHECK(k == multiplicity(b, a, c));
          CHECK(k == multiplicity(a, c, b));
        }
      }
  }
}

TEST_CASE("projection matrices are equivariant") {
  CounterRng rng(52);
  struct Case {
    Partition l, m, n;
  };
  for (const auto& c : {Case{P({3, 1}), P({2, 2}), P({2, 1, 1})}, Case{P({4, 1}), P({4, 1}), P({3, 2})},
                        Case{P({3, 2}), P({3, 2}), P({4, 1})}, Case{P({4, 1}), P({4, 1}), P({5})}}) {
    Matrix m = projection_matrix(c.l, c.m, c.n);
    CHECK(m.rows() == static_cast<std::size_t>(Integer(hook_length_dimension(c.l) * hook_length_dimension(c.m)).get_si()));
    CHECK(m.cols() == static_cast<std::size_t>(hook_length_dimension(c.n).get_si()));
    CHECK_FALSE(m.is_zero());
    int d = c.l.size();
    for (int t = 0; t < 10; ++t) CHECK(is_equivariant(m, c.l, c.m, c.n, random_permutation(rng, d)));
  }
  CHECK_THROWS_WITH_AS(projection_matrix(P({3, 1, 1}), P({3, 1, 1}), P({3, 2})), "projection not unique", Error);
}

TEST_CASE("worked d=4 projection matches after the V(2,2) basis change") {
  Matrix nat = projection_matrix(P({3, 1}), P({2, 2}), P({2, 1, 1}));
  CHECK(nat == Matrix::from_rows({{2, 1, 1}, {1, 2, -1}, {-1, 2, -1}, {1, 1, -2}, {1, 1, 2}, {2, -1, 1}}));

  Matrix paper = Matrix::from_rows({{1, -1, 2}, {2, 1, 1}, {-2, 1, 1}, {-1, 2, -1}, {-1, 2, 1}, {1, 1, 2}});
  // The displayed B₁ is e_{B1} − e_{B2} of the natural basis and B₂ is e_{B1}.
  Matrix x = Matrix::from_rows({{1, -1}, {1, 0}});
  CHECK(kron(Matrix::identity(3), x) * nat == paper);
  CHECK(paper.row(2) == std::vector<Rational>{-2, 1, 1});

  // Equivariance of the displayed matrix with Q'(2,2) = X·Q(2,2)·X⁻¹.
  NaturalRepresentation a(P({3, 1})), b(P({2, 2})), c(P({2, 1, 1}));
  for (const auto& g : all_permutations(4)) {
    Matrix qb = x * b.matrix(g) * inverse(x);
    CHECK(paper * c.matrix(g) == kron(a.matrix(g), qb) * paper);
  }
}

TEST_CASE("d=5 relation") {
  S5Verdict computed = verify_s5_syzygy({32, 50, 25, -180});
  CHECK(computed.anchored);
  CHECK(computed.pass);
  REQUIRE(computed.relation.coefficients.size() == 4);
  CHECK(computed.relation.coefficients == std::vector<Rational>{32, 50, 25, -180});
  CHECK(computed.relation.relation_dimension == 1);
  CHECK(computed.relation.mult_22 == 1);
  CHECK(computed.relation.mult_211 == 1);
  CHECK_FALSE(verify_s5_syzygy({33, 50, 25, -180}).pass);
  CHECK_FALSE(verify_s5_syzygy({0, 0, 0, 1}).pass);
  for (const auto& a : computed.relation.anchors) CHECK(a.found != 0);
}

TEST_CASE("redundancy conjecture for d = 6, 7") {
  for (int d : {6, 7}) {
    RelationReport r = test_conjecture(d);
    CHECK(r.pass);
    CHECK(r.mult_22 == 1);
    CHECK(r.mult_211 >= 1);
    CHECK(r.relation_dimension == 1);
    REQUIRE(r.coefficients.size() == 4);
    CHECK(r.coefficients[3] != 0);
  }
  CHECK_THROWS_AS(test_conjecture(8), Error);
}
