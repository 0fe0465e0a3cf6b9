#include <algorithm>
#include <numeric>

#include "tvx/symgroup.hpp"

namespace tvx {

namespace {

// Visits every filling obtained by permuting entries within columns, with the sign of that permutation.
template <typename Visit>
void column_orbit(std::vector<int>& filling, const std::vector<std::vector<int>>& columns, std::size_t col, int sign,
                  Visit& visit) {
  if (col == columns.size()) {
    visit(filling, sign);
    return;
  }
  const auto& cells = columns[col];
  std::vector<int> original(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) original[i] = filling[cells[i]];
  std::vector<int> order(cells.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t k = i + 1; k < order.size(); ++k) inversions += order[i] > order[k];
    for (std::size_t i = 0; i < cells.size(); ++i) filling[cells[i]] = original[order[i]];
    column_orbit(filling, columns, col + 1, inversions % 2 ? -sign : sign, visit);
  } while (std::next_permutation(order.begin(), order.end()));
  for (std::size_t i = 0; i < cells.size(); ++i) filling[cells[i]] = original[i];
}

}  // namespace

NaturalRepresentation::NaturalRepresentation(const Partition& shape)
    : shape_(shape), d_(shape.size()), basis_(standard_tableaux(shape)) {
  const int width = shape.parts.empty() ? 0 : shape.parts.front();
  columns_.assign(width, {});
  int cell = 0;
  for (std::size_t r = 0; r < shape.parts.size(); ++r)
    for (int c = 0; c < shape.parts[r]; ++c, ++cell) {
      row_of_cell_.push_back(static_cast<int>(r));
      columns_[c].push_back(cell);
    }

  for (std::size_t k = 0; k < basis_.size(); ++k) {
    std::vector<int> word(d_);
    for (std::size_t r = 0; r < basis_[k].rows.size(); ++r)
      for (int e : basis_[k].rows[r]) word[e - 1] = static_cast<int>(r);
    standard_tabloids_.emplace_back(std::move(word), static_cast<int>(k));
  }
  std::sort(standard_tabloids_.begin(), standard_tabloids_.end());

  const std::size_t n = basis_.size();
  Matrix restriction(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto row = standard_restriction(basis_[k].reading_word());
    for (std::size_t l = 0; l < n; ++l) restriction(k, l) = row[l];
  }
  restriction_inverse_ = inverse(restriction);
}

// Coefficients of the standard tabloids in the polytabloid of a filling (cells in reading order).
std::vector<Rational> NaturalRepresentation::standard_restriction(const std::vector<int>& filling) const {
  std::vector<Rational> out(basis_.size());
  std::vector<int> work = filling, word(d_);
  auto visit = [&](const std::vector<int>& f, int sign) {
    for (int cell = 0; cell < d_; ++cell) word[f[cell] - 1] = row_of_cell_[cell];
    auto it = std::lower_bound(standard_tabloids_.begin(), standard_tabloids_.end(), std::make_pair(word, -1));
    if (it != standard_tabloids_.end() && it->first == word) out[it->second] += sign;
  };
  column_orbit(work, columns_, 0, 1, visit);
  return out;
}

Matrix NaturalRepresentation::matrix(const Permutation& g) const {
  if (static_cast<int>(g.size()) != d_) throw Error("permutation size does not match the partition");
  const std::size_t n = basis_.size();
  Matrix q(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<int> moved = basis_[k].reading_word();
    for (int& e : moved) e = g[e - 1] + 1;
    auto coords = standard_restriction(moved) * restriction_inverse_;
    for (std::size_t l = 0; l < n; ++l) q(k, l) = coords[l];
  }
  return q;
}

namespace {

Permutation transposition(int d) {
  Permutation p(d);
  std::iota(p.begin(), p.end(), 0);
  if (d >= 2) std::swap(p[0], p[1]);
  return p;
}

Permutation long_cycle(int d) {
  Permutation p(d);
  for (int i = 0; i < d; ++i) p[i] = (i + 1) % d;
  return p;
}

Matrix power(const Matrix& m, int e) {
  Matrix out = Matrix::identity(m.rows());
  for (int i = 0; i < e; ++i) out = out * m;
  return out;
}

}  // namespace

GeneratorMatrices generator_matrices(const Partition& shape) {
  NaturalRepresentation rep(shape);
  const int d = shape.size();
  GeneratorMatrices g{{shape, "(1,2)", rep.matrix(transposition(d))},
                      {shape, "(1,...," + std::to_string(d) + ")", rep.matrix(long_cycle(d))}};
  const Matrix id = Matrix::identity(rep.dimension());
  const Matrix& s = g.transposition.matrix;
  const Matrix& c = g.long_cycle.matrix;
  if (!(s * s == id)) throw Error("generator relation s^2 = 1 failed");
  if (!(power(c, d) == id)) throw Error("generator relation c^d = 1 failed");
  if (d >= 2 && !(power(s * c, d - 1) == id)) throw Error("generator relation (sc)^(d-1) = 1 failed");
  return g;
}

namespace {

// Σ_g (Q_λ(g) ⊗ Q_μ(g))·e_i e_jᵀ·Q_ν(g⁻¹) for a fixed basis pair (i = (i1,i2), j).
Matrix reynolds(const NaturalRepresentation& l, const NaturalRepresentation& m, const NaturalRepresentation& n,
                const std::vector<Permutation>& group, std::size_t i1, std::size_t i2, std::size_t j) {
  const std::size_t dl = l.dimension(), dm = m.dimension(), dn = n.dimension();
  Matrix out(dl * dm, dn);
  for (const auto& g : group) {
    Matrix ql = l.matrix(g), qm = m.matrix(g), qn = n.matrix(inverse(g));
    for (std::size_t a = 0; a < dl; ++a) {
      const Rational& x = ql(a, i1);
      if (x == 0) continue;
      for (std::size_t b = 0; b < dm; ++b) {
        Rational y = x * qm(b, i2);
        if (y == 0) continue;
        for (std::size_t c = 0; c < dn; ++c)
          if (qn(j, c) != 0) out(a * dm + b, c) += y * qn(j, c);
      }
    }
  }
  return out;
}

}  // namespace

bool is_equivariant(const Matrix& m, const Partition& lambda, const Partition& mu, const Partition& nu,
                    const Permutation& g) {
  NaturalRepresentation l(lambda), u(mu), n(nu);
  return kron(l.matrix(g), u.matrix(g)) * m == m * n.matrix(g);
}

Matrix projection_matrix(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (multiplicity(lambda, mu, nu) != 1) throw Error("projection not unique");
  NaturalRepresentation l(lambda), u(mu), n(nu);
  const int d = lambda.size();
  const auto group = all_permutations(d);
  Matrix m;
  for (std::size_t j = 0; j < n.dimension() && m.rows() == 0; ++j)
    for (std::size_t i1 = 0; i1 < l.dimension() && m.rows() == 0; ++i1)
      for (std::size_t i2 = 0; i2 < u.dimension() && m.rows() == 0; ++i2) {
        Matrix candidate = reynolds(l, u, n, group, i1, i2, j);
        if (!candidate.is_zero()) m = candidate;
      }
  if (m.rows() == 0) throw Error("projection not found");

  std::vector<Rational> flat;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) flat.push_back(m(r, c));
  make_primitive(flat);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = flat[r * m.cols() + c];

  if (d >= 2) {
    Permutation s(d), c(d);
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[0], s[1]);
    for (int i = 0; i < d; ++i) c[i] = (i + 1) % d;
    for (const auto& g : {s, c})
      if (!(kron(l.matrix(g), u.matrix(g)) * m == m * n.matrix(g))) throw Error("projection failed equivariance");
  }
  return m;
}

}  // namespace tvx
