#include <array>
#include <sstream>

#include "tvx/random.hpp"
#include "tvx/suite.hpp"
#include "tvx/symgroup.hpp"
#include "tvx/syzygy.hpp"
#include "tvx/transvectant.hpp"
#include "tvx/wigner.hpp"

namespace tvx {

namespace {

using Grid = std::array<int, 3>;
const std::vector<Grid> kKappaGrid{{5, 3, 2}, {5, 3, 3}, {7, 5, 4}, {8, 6, 5}, {6, 6, 4}};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

std::string table_entries(const SyzygyTable& t, const std::vector<std::pair<int, int>>& keys) {
  std::vector<std::string> parts;
  for (auto [i, j] : keys) parts.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")=" + to_string(t.at(i, j)));
  return join(parts);
}

// Table scaled so the entry at `anchor` equals `value`, compared against every entry.
CheckOutcome anchored_table(const SyzygyTable& raw, std::pair<int, int> anchor, const Rational& value,
                            const std::map<std::pair<int, int>, Rational>& expected) {
  CheckOutcome out;
  std::vector<std::pair<int, int>> keys;
  for (const auto& [k, v] : raw.coeffs) keys.push_back(k);
  std::map<std::pair<int, int>, Rational> full;
  for (auto k : keys) full[k] = 0;
  for (const auto& [k, v] : expected) full[k] = v;
  std::vector<std::string> exp;
  for (const auto& [k, v] : full) exp.push_back("(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")=" + to_string(v));
  out.expected = join(exp);
  if (raw.at(anchor.first, anchor.second) == 0) {
    out.actual = "anchor entry is zero";
    return out;
  }
  SyzygyTable t = raw.scaled(value / raw.at(anchor.first, anchor.second));
  out.actual = table_entries(t, keys);
  out.pass = full.size() == t.coeffs.size();
  for (const auto& [k, v] : full) out.pass = out.pass && t.at(k.first, k.second) == v;
  return out;
}

CheckOutcome check_eq13(std::uint64_t, int) {
  return anchored_table(vartheta_table(5, 3, 2, {0, 0}), {0, 2}, Rational(-1),
                        {{{0, 0}, make_rational(21, 8)},
                         {{0, 1}, make_rational(21, 16)},
                         {{1, 1}, make_rational(315, 256)},
                         {{0, 2}, Rational(-1)}});
}

CheckOutcome check_eq14(std::uint64_t, int) {
  return anchored_table(vartheta_table(5, 3, 3, {0, 0}), {0, 3}, Rational(-1),
                        {{{0, 1}, make_rational(20, 3)},
                         {{0, 2}, make_rational(20, 9)},
                         {{1, 2}, make_rational(25, 14)},
                         {{0, 3}, Rational(-1)}});
}

CheckOutcome check_754(std::uint64_t, int) {
  return anchored_table(vartheta_table(7, 5, 4, {0, 1}), {0, 0}, Rational(1),
                        {{{0, 0}, Rational(1)},
                         {{0, 1}, make_rational(8, 3)},
                         {{0, 2}, make_rational(54, 55)},
                         {{0, 3}, make_rational(-1, 6)},
                         {{0, 4}, make_rational(-10, 63)},
                         {{1, 1}, make_rational(-7, 12)},
                         {{1, 2}, make_rational(63, 55)},
                         {{1, 3}, make_rational(49, 72)},
                         {{2, 2}, make_rational(-1512, 3025)}});
}

CheckOutcome check_865(std::uint64_t, int) {
  SyzygyTable t = vartheta_table(8, 6, 5, {1, 0});
  CheckOutcome out{false, "theta(0,5) = -2/63", "theta(0,5) = " + to_string(t.at(0, 5))};
  out.pass = t.at(0, 5) == make_rational(-2, 63);
  return out;
}

// Every (i, j) with i + j ≤ r, in both orders, and every lattice point.
template <typename F>
void for_admissible(int m, int n, int r, F&& f) {
  for (const auto& p : pi_set(m, n, r))
    for (int i = 0; i <= r; ++i)
      for (int j = 0; i + j <= r; ++j) f(i, j, p);
  (void)m;
  (void)n;
}

CheckOutcome check_kappa_routes(std::uint64_t, int) {
  CheckOutcome out{false, "kappa = kappa_oracle = kappa_via_ninej on every admissible input", ""};
  std::size_t total = 0;
  std::vector<std::string> bad;
  for (auto [m, n, r] : kKappaGrid)
    for_admissible(m, n, r, [&](int i, int j, LatticePoint p) {
      ++total;
      Rational k = kappa(m, n, r, i, j, p);
      Rational o = kappa_oracle(m, n, r, i, j, p);
      Rational w = kappa_via_ninej(m, n, r, i, j, p.a, p.b);
      if (k != o || k != w)
        bad.push_back("(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) + ") i=" +
                      std::to_string(i) + " j=" + std::to_string(j) + " p=(" + std::to_string(p.a) + "," +
                      std::to_string(p.b) + "): " + to_string(k) + " / " + to_string(o) + " / " + to_string(w));
    });
  out.pass = bad.empty() && total > 0;
  out.actual = std::to_string(total - bad.size()) + "/" + std::to_string(total) + " agree";
  if (!bad.empty()) out.actual += "; first mismatch " + bad.front();
  return out;
}

CheckOutcome check_random_tables(std::uint64_t seed, int trials) {
  CheckOutcome out{false, "all tables for 2 <= m,n <= 8 verify with " + std::to_string(trials) + " trials", ""};
  std::size_t total = 0;
  std::vector<std::string> bad;
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n)
      for (int r = 2; r <= std::min(m, n); ++r) {
        std::vector<SyzygyTable> tables;
        for (const auto& p : pi_set(m, n, r)) tables.push_back(vartheta_table(m, n, r, p));
        tables.push_back(closed_form_table(m, n, r));
        for (const auto& t : tables) {
          ++total;
          TableVerdict v = verify_table(t, trials, seed);
          if (!v.pass) {
            std::string where = "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) + ") ";
            where += t.point ? "(" + std::to_string(t.point->a) + "," + std::to_string(t.point->b) + ")" : "closed-form";
            bad.push_back(where + ": " + v.reason);
          }
        }
      }
  out.pass = bad.empty();
  out.actual = std::to_string(total - bad.size()) + "/" + std::to_string(total) + " tables verified";
  if (!bad.empty()) out.actual += "; first failure " + bad.front();
  return out;
}

CheckOutcome check_reconstruct(std::uint64_t seed, int) {
  CheckOutcome out{false, "reconstruct(u0,u1) equals (A,B)_r for r >= 2 on 10 random pairs per (m,n)", ""};
  CounterRng base = CounterRng(seed).split(7);
  std::size_t total = 0, good = 0;
  const std::array<std::pair<int, int>, 3> orders{{{5, 3}, {4, 4}, {6, 5}}};
  for (std::size_t k = 0; k < orders.size(); ++k) {
    auto [m, n] = orders[k];
    for (int t = 0; t < 10; ++t) {
      CounterRng rng = base.split(k * 100 + t);
      BinaryForm a = random_binary_form(rng, m), b = random_binary_form(rng, n);
      auto rec = reconstruct(transvect(a, b, 0), transvect(a, b, 1), m, n);
      ++total;
      bool ok = static_cast<int>(rec.size()) == std::min(m, n) - 1;
      for (int r = 2; ok && r <= std::min(m, n); ++r) ok = rec[r - 2] == transvect(a, b, r);
      good += ok ? 1 : 0;
    }
  }
  out.pass = good == total;
  out.actual = std::to_string(good) + "/" + std::to_string(total) + " pairs reconstructed exactly";
  return out;
}

CheckOutcome check_segre(std::uint64_t seed, int) {
  CheckOutcome out{false, "segre22 identities and the sextic for u1 hold on 20 random quadratic pairs", ""};
  CounterRng base = CounterRng(seed).split(8);
  int good = 0;
  std::string first;
  for (int t = 0; t < 20; ++t) {
    CounterRng rng = base.split(t);
    BinaryForm a = random_binary_form(rng, 2), b = random_binary_form(rng, 2);
    IdentityVerdict s = segre22_identity_check(a, b), q = minimal_equation_u1_check(a, b);
    if (s.pass && q.pass) {
      ++good;
    } else if (first.empty()) {
      auto f = s.failures();
      for (const auto& x : q.failures()) f.push_back(x);
      first = "trial " + std::to_string(t) + ": " + join(f);
    }
  }
  out.pass = good == 20;
  out.actual = std::to_string(good) + "/20 pairs";
  if (!first.empty()) out.actual += "; " + first;
  return out;
}

std::vector<std::array<int, 3>> triads_up_to(int twice_max) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a <= twice_max; ++a)
    for (int b = 0; b <= twice_max; ++b)
      for (int c = 0; c <= twice_max; ++c)
        if (is_triad(HalfInt{a}, HalfInt{b}, HalfInt{c})) out.push_back({a, b, c});
  return out;
}

std::vector<NineJArray> exhaustive_ninej(int twice_max) {
  auto triads = triads_up_to(twice_max);
  std::vector<NineJArray> out;
  for (const auto& r1 : triads)
    for (const auto& r2 : triads)
      for (int g = 0; g <= twice_max; ++g) {
        if (!is_triad(HalfInt{r1[0]}, HalfInt{r2[0]}, HalfInt{g})) continue;
        for (int h = 0; h <= twice_max; ++h) {
          if (!is_triad(HalfInt{r1[1]}, HalfInt{r2[1]}, HalfInt{h})) continue;
          for (int i = 0; i <= twice_max; ++i) {
            if (!is_triad(HalfInt{r1[2]}, HalfInt{r2[2]}, HalfInt{i})) continue;
            if (!is_triad(HalfInt{g}, HalfInt{h}, HalfInt{i})) continue;
            NineJArray a;
            for (int c = 0; c < 3; ++c) {
              a.j[0][c] = HalfInt{r1[c]};
              a.j[1][c] = HalfInt{r2[c]};
            }
            a.j[2] = {HalfInt{g}, HalfInt{h}, HalfInt{i}};
            out.push_back(a);
          }
        }
      }
  return out;
}

std::vector<NineJArray> random_ninej(CounterRng rng, int twice_max, int count) {
  std::vector<NineJArray> out;
  while (static_cast<int>(out.size()) < count) {
    NineJArray a;
    for (auto& row : a.j)
      for (auto& e : row) e = HalfInt{static_cast<int>(rng.uniform(0, twice_max))};
    if (a.valid()) out.push_back(a);
  }
  return out;
}

CheckOutcome check_ninej(std::uint64_t seed, int) {
  CheckOutcome out{false, "operator = triple sum and the symmetry law on all arrays <= 3 and 200 random arrays <= 6", ""};
  auto arrays = exhaustive_ninej(6);
  std::size_t exhaustive = arrays.size();
  auto extra = random_ninej(CounterRng(seed).split(9), 12, 200);
  arrays.insert(arrays.end(), extra.begin(), extra.end());
  std::size_t route_bad = 0, sym_bad = 0;
  std::string first;
  for (const auto& a : arrays) {
    if (!(ninej_operator(a) == ninej_triple_sum(a))) {
      ++route_bad;
      if (first.empty()) first = "route mismatch at " + to_string(a);
    }
    SymmetryVerdict s = ninej_symmetry_check(a);
    if (!s.pass) {
      ++sym_bad;
      if (first.empty()) first = "symmetry failure at " + to_string(a);
    }
  }
  out.pass = route_bad == 0 && sym_bad == 0;
  out.actual = std::to_string(exhaustive) + " exhaustive + " + std::to_string(extra.size()) +
               " random arrays; route mismatches " + std::to_string(route_bad) + ", symmetry failures " +
               std::to_string(sym_bad);
  if (!first.empty()) out.actual += "; " + first;
  return out;
}

CheckOutcome check_stretched(std::uint64_t, int) {
  CheckOutcome out{false, "single-term triple sum and kappa != 0 at i=a=b=0, j=r", ""};
  std::vector<std::string> parts;
  bool ok = true;
  for (auto [m, n, r] : kKappaGrid) {
    std::size_t terms = ninej_triple_sum_support(kappa_ninej_array_rearranged(m, n, r, 0, r, 0, 0));
    std::size_t lambda = kappa_support_size(m, n, r, 0, r, {0, 0});
    Rational k = kappa(m, n, r, 0, r, {0, 0});
    ok = ok && terms == 1 && lambda == 1 && k != 0;
    parts.push_back("(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) +
                    "): terms=" + std::to_string(terms) + " lambda=" + std::to_string(lambda) +
                    " kappa=" + to_string(k));
  }
  out.pass = ok;
  out.actual = join(parts);
  return out;
}

CheckOutcome check_s5(std::uint64_t, int) {
  S5Verdict v = verify_s5_syzygy();
  CheckOutcome out{v.pass, "32 pi1(z1 z1) + 100 eta1(z1 z2) + 25 eta2(z2 z2) - 180 z1 z3 = 0", v.detail};
  return out;
}

CheckOutcome check_conjecture(std::uint64_t, int) {
  CheckOutcome out{true, "d=6,7: (d-2,2)o(d-2,2)o(d-1,1)=1, (d-2,1,1)o(d-2,1,1)o(d-1,1)>=1, c4 != 0", ""};
  std::vector<std::string> parts;
  for (int d : {6, 7}) {
    RelationReport r = test_conjecture(d);
    out.pass = out.pass && r.pass;
    std::vector<std::string> c;
    for (const auto& x : r.coefficients) c.push_back(to_string(x));
    parts.push_back("d=" + std::to_string(d) + ": " + r.detail + " c=(" + join(c) + ")");
  }
  out.actual = join(parts);
  return out;
}

// Substitution x ↦ g·x for a random product of unimodular shears.
std::array<std::array<Rational, 2>, 2> random_unimodular(CounterRng& rng) {
  std::array<std::array<Rational, 2>, 2> g{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
  for (int k = 0; k < 3; ++k) {
    Rational t = rng.small_rational();
    std::array<std::array<Rational, 2>, 2> e{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
    if (k % 2 == 0) e[0][1] = t;
    else e[1][0] = t;
    std::array<std::array<Rational, 2>, 2> p{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) p[i][j] = g[i][0] * e[0][j] + g[i][1] * e[1][j];
    g = p;
  }
  return g;
}

BinaryForm substitute(const BinaryForm& f, const std::array<std::array<Rational, 2>, 2>& g) {
  return BinaryForm(f.pair(), transform_pair(f.form(), f.pair(), g));
}

CheckOutcome check_properties(std::uint64_t seed, int) {
  CheckOutcome out{false, "dimension identity, coin inequality, pi o iota = id, sign rule, covariance, Jacobian exchange", ""};
  std::vector<std::string> failed;

  bool dim = true;
  for (long w1 = 1; w1 <= 20; ++w1)
    for (long w2 = 1; w2 <= 20; ++w2)
      dim = dim && binomial(w1, 2) * binomial(w2, 2) + binomial(w1 + 1, 2) * binomial(w2 + 1, 2) ==
                       binomial(w1 * w2 + 1, 2);
  if (!dim) failed.push_back("dimension identity");

  bool coin = true;
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= 12; ++n)
      for (int r = 2; r <= std::min(m, n); ++r) coin = coin && binomial(m + n - r + 1, r) > binomial(m, r) + binomial(n, r);
  if (!coin) failed.push_back("coin inequality");

  CounterRng base = CounterRng(seed).split(13);
  bool section = true;
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      for (int r = 0; r <= std::min(m, n); ++r) {
        CounterRng rng = base.split(static_cast<std::uint64_t>(100 * m + 10 * n + r));
        BinaryForm c = random_binary_form(rng, m + n - 2 * r);
        section = section && project_pi(section_iota(c, m, n, r), r) == c;
      }
  if (!section) failed.push_back("pi o iota");

  bool sign = true;
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      CounterRng rng = base.split(static_cast<std::uint64_t>(1000 + 10 * m + n));
      BinaryForm a = random_binary_form(rng, m), b = random_binary_form(rng, n);
      for (int r = 0; r <= std::min(m, n); ++r) {
        BinaryForm ab = transvect(a, b, r);
        if (r % 2) ab *= Rational(-1);
        sign = sign && transvect(b, a, r) == ab;
      }
    }
  if (!sign) failed.push_back("sign rule");

  bool cov = true;
  for (int t = 0; t < 10; ++t) {
    CounterRng rng = base.split(static_cast<std::uint64_t>(2000 + t));
    int m = static_cast<int>(rng.uniform(0, 5)), n = static_cast<int>(rng.uniform(0, 5));
    BinaryForm a = random_binary_form(rng, m), b = random_binary_form(rng, n);
    auto g = random_unimodular(rng);
    for (int r = 0; r <= std::min(m, n); ++r)
      cov = cov && transvect(substitute(a, g), substitute(b, g), r) == substitute(transvect(a, b, r), g);
  }
  if (!cov) failed.push_back("covariance");

  bool jac = true;
  for (int t = 0; t < 10; ++t) {
    CounterRng rng = base.split(static_cast<std::uint64_t>(3000 + t));
    int m = static_cast<int>(rng.uniform(0, 4)), n = static_cast<int>(rng.uniform(0, 4)),
        s = static_cast<int>(rng.uniform(1, 4));
    jac = jac && jacobian_exchange_check(random_binary_form(rng, m), random_binary_form(rng, n),
                                         random_binary_form(rng, s), random_binary_form(rng, s))
                     .holds;
  }
  if (!jac) failed.push_back("Jacobian exchange");

  out.pass = failed.empty();
  out.actual = failed.empty() ? "all properties hold" : "failed: " + join(failed);
  return out;
}

}  // namespace

const std::vector<CheckSpec>& all_checks() {
  static const std::vector<CheckSpec> checks{
      {"C01", "syzygy", "(5,3,2) table reproduces 21/8, 21/16, 315/256", 1, check_eq13},
      {"C02", "syzygy", "(5,3,3) table reproduces 20/3, 20/9, 25/14", 1, check_eq14},
      {"C03", "syzygy", "(7,5,4) table at (0,1) reproduces the nine coefficients", 2, check_754},
      {"C04", "syzygy", "(8,6,5) table at (1,0) has theta(0,5) = -2/63", 2, check_865},
      {"C05", "bridge", "kappa, operator chain and 9-j routes agree", 120, check_kappa_routes},
      {"C06", "syzygy", "randomized verification of every table, m,n <= 8", 300, check_random_tables},
      {"C07", "syzygy", "reconstruction of higher transvectants from u0, u1", 60, check_reconstruct},
      {"C08", "syzygy", "quadratic pair identities and the sextic for u1", 30, check_segre},
      {"C09", "wigner", "9-j operator route equals triple sum; symmetry law", 300, check_ninej},
      {"C10", "bridge", "stretched case reduces to a single term", 10, check_stretched},
      {"C11", "symgroup", "the d=5 relation among pi1, eta1, eta2, z1 z3", 30, check_s5},
      {"C12", "symgroup", "redundancy conjecture for d = 6, 7", 120, check_conjecture},
      {"C13", "core", "property suites", 120, check_properties},
  };
  return checks;
}

}  // namespace tvx
