#include <algorithm>
#include <numeric>
#include <sstream>

#include "tvx/transvectant.hpp"
#include "tvx/wigner.hpp"

namespace tvx {

namespace {

int half(int twice) {
  if (twice % 2) throw Error("not a triad");
  return twice / 2;
}

Integer fac(long k) {
  if (k < 0) throw Error("negative factorial argument in triple sum");
  return factorial(k);
}

int parity(long k) { return k % 2 ? -1 : 1; }

// Named entries of the array, as twice-values.
struct Entries {
  int j1, j2, j12, j3, j4, j34, j13, j24, J;
  explicit Entries(const NineJArray& a)
      : j1(a.j[0][0].twice), j2(a.j[0][1].twice), j12(a.j[0][2].twice), j3(a.j[1][0].twice), j4(a.j[1][1].twice),
        j34(a.j[1][2].twice), j13(a.j[2][0].twice), j24(a.j[2][1].twice), J(a.j[2][2].twice) {}
};

// Q₁, Q₂, Q₃ of the 9-j normalization.
std::array<Integer, 3> q_factors(const Entries& e) {
  auto d = [](int p, int q, int s) { return half(p + q - s); };
  Integer q1 = fac(d(e.j1, e.j12, e.j2)) * fac(d(e.j2, e.j12, e.j1)) * fac(d(e.j3, e.j34, e.j4)) *
               fac(d(e.j4, e.j34, e.j3)) * fac(d(e.j12, e.J, e.j34)) * fac(d(e.j34, e.J, e.j12));
  Integer q2 = fac(half(e.j1 + e.j2 + e.j12) + 1) * fac(half(e.j3 + e.j4 + e.j34) + 1) *
               fac(half(e.j13 + e.j24 + e.J) + 1) * fac(half(e.j1 + e.j3 + e.j13) + 1) *
               fac(half(e.j2 + e.j4 + e.j24) + 1) * fac(half(e.j12 + e.j34 + e.J) + 1);
  Integer q3 = fac(d(e.j1, e.j2, e.j12)) * fac(d(e.j3, e.j4, e.j34)) * fac(d(e.j13, e.j24, e.J)) *
               fac(d(e.j13, e.J, e.j24)) * fac(d(e.j24, e.J, e.j13)) * fac(d(e.j1, e.j3, e.j13)) *
               fac(d(e.j1, e.j13, e.j3)) * fac(d(e.j3, e.j13, e.j1)) * fac(d(e.j2, e.j4, e.j24)) *
               fac(d(e.j2, e.j24, e.j4)) * fac(d(e.j4, e.j24, e.j2)) * fac(d(e.j12, e.j34, e.J));
  return {q1, q2, q3};
}

void require_valid(const NineJArray& a) {
  if (!a.valid()) throw Error("not a triad");
}

// [a,b,c]² for twice-valued a, b, c.
Rational bracket_sq(int a, int b, int c) {
  return make_rational(fac(half(a - b + c)) * fac(half(a + b - c)) * fac(half(a + b + c) + 1), fac(half(-a + b + c)));
}

struct TripleParams {
  long x1, x2, x3, x4, x5, y1, y2, y3, y4, y5, z1, z2, z3, z4, z5, p1, p2, p3;
};

TripleParams triple_params(const Entries& e) {
  TripleParams t{};
  t.x1 = e.j34;
  t.x2 = half(e.j3 + e.j4 - e.j34);
  t.x3 = half(e.j12 - e.j34 + e.J);
  t.x4 = half(-e.j3 + e.j4 + e.j34);
  t.x5 = half(e.j12 + e.j34 - e.J);
  t.y1 = half(-e.j2 + e.j4 + e.j24);
  t.y2 = half(e.j13 + e.j24 - e.J);
  t.y3 = e.j24 + 1;
  t.y4 = half(e.j2 + e.j4 - e.j24);
  t.y5 = half(e.j13 - e.j24 + e.J);
  t.z1 = e.j1;
  t.z2 = half(-e.j1 + e.j2 + e.j12);
  t.z3 = half(e.j1 + e.j3 + e.j13) + 1;
  t.z4 = half(e.j1 + e.j3 - e.j13);
  t.z5 = half(e.j1 - e.j2 + e.j12);
  t.p1 = half(e.j1 + e.j3 - e.j24 + e.J);
  t.p2 = half(-e.j2 + e.j3 - e.j34 + e.j24);
  t.p3 = half(-e.j1 + e.j2 - e.j34 + e.J);
  return t;
}

template <typename Visit>
void for_each_triple(const TripleParams& t, Visit visit) {
  for (long x = 0; x <= std::min(t.x4, t.x5); ++x)
    for (long y = std::max(0L, -t.p2 - x); y <= std::min(t.y4, t.y5); ++y)
      for (long z = std::max(0L, -t.p3 - x); z <= std::min({t.z4, t.z5, t.p1 - y}); ++z) visit(x, y, z);
}

}  // namespace

bool NineJArray::valid() const {
  for (int k = 0; k < 3; ++k) {
    if (!is_triad(j[k][0], j[k][1], j[k][2])) return false;
    if (!is_triad(j[0][k], j[1][k], j[2][k])) return false;
  }
  return true;
}

NineJArray NineJArray::transposed() const {
  NineJArray t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t.j[c][r] = j[r][c];
  return t;
}

int NineJArray::twice_sum() const {
  int s = 0;
  for (const auto& row : j)
    for (HalfInt h : row) s += h.twice;
  return s;
}

NineJArray parse_ninej(std::string_view text) {
  NineJArray a;
  std::string s(text);
  std::replace(s.begin(), s.end(), ';', ' ');
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::string token;
  int k = 0;
  while (in >> token) {
    if (k == 9) throw Error("9-j array needs exactly nine entries");
    a.j[k / 3][k % 3] = parse_halfint(token);
    ++k;
  }
  if (k != 9) throw Error("9-j array needs exactly nine entries");
  for (const auto& row : a.j)
    for (HalfInt h : row)
      if (h.twice < 0) throw Error("negative spin");
  return a;
}

std::string to_string(const NineJArray& a) {
  std::string out;
  for (int r = 0; r < 3; ++r) {
    if (r) out += "; ";
    for (int c = 0; c < 3; ++c) {
      if (c) out += ' ';
      out += to_string(a.j[r][c]);
    }
  }
  return out;
}

QuadraticSurd ninej_operator(const NineJArray& a) {
  require_valid(a);
  const Entries e(a);
  auto d = [](int p, int q, int s) { return half(p + q - s); };

  MultiForm f = MultiForm::monomial(1, {{Pair::z, {e.J, 0}}});
  f = polarize(f, Pair::z, Pair::x, d(e.j13, e.J, e.j24));
  f = polarize(f, Pair::z, Pair::y, d(e.j24, e.J, e.j13));
  f = bracket_pow(Pair::x, Pair::y, d(e.j13, e.j24, e.J)) * drop_pair(f, Pair::z);
  f = polarize(f, Pair::x, Pair::p, d(e.j1, e.j13, e.j3));
  f = polarize(f, Pair::x, Pair::q, d(e.j13, e.j3, e.j1));
  f = bracket_pow(Pair::p, Pair::q, d(e.j1, e.j3, e.j13)) * drop_pair(f, Pair::x);
  f = polarize(f, Pair::y, Pair::u, d(e.j2, e.j24, e.j4));
  f = polarize(f, Pair::y, Pair::v, d(e.j4, e.j24, e.j2));
  f = bracket_pow(Pair::u, Pair::v, d(e.j2, e.j4, e.j24)) * drop_pair(f, Pair::y);
  f = omega(f, Pair::p, Pair::u, d(e.j1, e.j2, e.j12));
  f = substitute_pair(substitute_pair(f, Pair::p, Pair::x), Pair::u, Pair::x);
  f = omega(f, Pair::q, Pair::v, d(e.j3, e.j4, e.j34));
  f = substitute_pair(substitute_pair(f, Pair::q, Pair::y), Pair::v, Pair::y);
  f = omega(f, Pair::x, Pair::y, d(e.j12, e.j34, e.J));
  f = substitute_pair(substitute_pair(f, Pair::x, Pair::z), Pair::y, Pair::z);

  Monomial target;
  target.set(Pair::z, 0, e.J);
  auto beta = f.scalar_multiple_of(target);
  if (!beta) throw Error("operator chain inconsistent");

  const auto [q1, q2, q3] = q_factors(e);
  return QuadraticSurd(*beta * Rational(e.J + 1)) * QuadraticSurd::sqrt_of(make_rational(q1, q2 * q3));
}

std::size_t ninej_triple_sum_support(const NineJArray& a) {
  require_valid(a);
  std::size_t count = 0;
  for_each_triple(triple_params(Entries(a)), [&](long, long, long) { ++count; });
  return count;
}

QuadraticSurd ninej_triple_sum(const NineJArray& a) {
  require_valid(a);
  const Entries e(a);
  const TripleParams t = triple_params(e);

  Rational sum(0);
  for_each_triple(t, [&](long x, long y, long z) {
    Integer num = fac(t.x1 - x) * fac(t.x2 + x) * fac(t.x3 + x) * fac(t.y1 + y) * fac(t.y2 + y) * fac(t.z1 - z) *
                  fac(t.z2 + z) * fac(t.p1 - y - z);
    Integer den = fac(x) * fac(y) * fac(z) * fac(t.x4 - x) * fac(t.x5 - x) * fac(t.y3 + y) * fac(t.y4 - y) *
                  fac(t.y5 - y) * fac(t.z3 - z) * fac(t.z4 - z) * fac(t.z5 - z) * fac(t.p2 + x + y) *
                  fac(t.p3 + x + z);
    Rational term = make_rational(num, den);
    if ((x + y + z) % 2) sum -= term;
    else sum += term;
  });
  if (sum == 0) return QuadraticSurd();

  Rational under = bracket_sq(e.j3, e.j1, e.j13) * bracket_sq(e.j2, e.j4, e.j24) * bracket_sq(e.J, e.j13, e.j24) /
                   (bracket_sq(e.j3, e.j4, e.j34) * bracket_sq(e.j2, e.j1, e.j12) * bracket_sq(e.J, e.j12, e.j34));
  return QuadraticSurd(Rational(parity(t.x5)) * sum) * QuadraticSurd::sqrt_of(under);
}

SymmetryVerdict ninej_symmetry_check(const NineJArray& a) {
  require_valid(a);
  SymmetryVerdict v;
  const QuadraticSurd base = ninej_triple_sum(a);
  const int total = a.twice_sum() / 2;

  auto record = [&](const NineJArray& image, int sign, const std::string& label) {
    ++v.checked;
    QuadraticSurd value = ninej_triple_sum(image);
    QuadraticSurd expected = sign > 0 ? base : -base;
    if (!(value == expected)) v.failures.push_back(label + ": " + to_string(value) + " vs " + to_string(expected));
  };

  record(a.transposed(), 1, "transpose");
  std::array<int, 3> rows{0, 1, 2};
  do {
    std::array<int, 3> cols{0, 1, 2};
    do {
      NineJArray image;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) image.j[r][c] = a.j[rows[r]][cols[c]];
      auto odd = [](const std::array<int, 3>& p) {
        int inv = 0;
        for (int i = 0; i < 3; ++i)
          for (int k = i + 1; k < 3; ++k) inv += p[i] > p[k];
        return inv % 2;
      };
      int eps = (odd(rows) + odd(cols)) % 2 ? -1 : 1;
      int sign = eps < 0 && total % 2 ? -1 : 1;
      record(image, sign,
             "rows " + std::to_string(rows[0]) + std::to_string(rows[1]) + std::to_string(rows[2]) + " cols " +
                 std::to_string(cols[0]) + std::to_string(cols[1]) + std::to_string(cols[2]));
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));

  v.pass = v.failures.empty();
  return v;
}

NineJArray kappa_ninej_array(int m, int n, int r, int i, int j, int a, int b) {
  NineJArray arr;
  arr.j = {{{HalfInt{m}, HalfInt{n}, HalfInt{m + n - 2 * i}},
            {HalfInt{m}, HalfInt{n}, HalfInt{m + n - 2 * j}},
            {HalfInt::integer(m - 2 * a - 1), HalfInt::integer(n - 2 * b - 1), HalfInt::integer(m + n - r)}}};
  return arr;
}

NineJArray kappa_ninej_array_rearranged(int m, int n, int r, int i, int j, int a, int b) {
  NineJArray arr;
  arr.j = {{{HalfInt{m + n - 2 * i}, HalfInt::integer(m + n - r), HalfInt{m + n - 2 * j}},
            {HalfInt{n}, HalfInt::integer(n - 2 * b - 1), HalfInt{n}},
            {HalfInt{m}, HalfInt::integer(m - 2 * a - 1), HalfInt{m}}}};
  return arr;
}

Rational kappa_via_ninej(int m, int n, int r, int i, int j, int a, int b) {
  if (r < 2 || r > std::min(m, n) || i < 0 || j < 0 || i + j > r || a < 0 || b < 0 || 2 * (a + b + 1) > r)
    throw Error("inadmissible kappa index");
  const NineJArray arr = kappa_ninej_array(m, n, r, i, j, a, b);
  const Entries e(arr);

  const auto [q1, q2, q3] = q_factors(e);

  Rational k = factor_h(m, n, i) * factor_h(m, n, j) * factor_h(m + n - 2 * i, m + n - 2 * j, r - i - j) /
               Rational(factorial(2 * m + 2 * n - 2 * r) * factorial(2 * m - 4 * a - 2) * factorial(2 * n - 4 * b - 2));
  QuadraticSurd value = QuadraticSurd(k / Rational(e.J + 1)) * QuadraticSurd::sqrt_of(make_rational(q2 * q3, q1)) *
                        ninej_triple_sum(kappa_ninej_array_rearranged(m, n, r, i, j, a, b));
  if (!value.is_rational()) throw Error("normalization mismatch");
  return value.coeff();
}

}  // namespace tvx
