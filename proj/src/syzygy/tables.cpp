#include <algorithm>

#include "chain.hpp"
#include "tvx/random.hpp"
#include "tvx/syzygy.hpp"
#include "tvx/transvectant.hpp"

namespace tvx {

Rational SyzygyTable::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = coeffs.find({i, j});
  return it == coeffs.end() ? Rational(0) : it->second;
}

bool SyzygyTable::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second == 0; });
}

SyzygyTable SyzygyTable::scaled(const Rational& s) const {
  SyzygyTable out = *this;
  for (auto& [key, value] : out.coeffs) value *= s;
  return out;
}

namespace {

template <typename Coefficient>
SyzygyTable build_table(int m, int n, int r, std::optional<LatticePoint> p, Coefficient coefficient) {
  SyzygyTable t{m, n, r, p, {}};
  for (int i = 0; i <= r; ++i)
    for (int j = i; i + j <= r; ++j) {
      Rational k = coefficient(i, j);
      t.coeffs[{i, j}] = i == j ? k : 2 * k;
    }
  return t;
}

}  // namespace

SyzygyTable vartheta_table(int m, int n, int r, LatticePoint p) {
  return build_table(m, n, r, p, [&](int i, int j) { return kappa(m, n, r, i, j, p); });
}

SyzygyTable vartheta_table_oracle(int m, int n, int r, LatticePoint p) {
  kappa_oracle(m, n, r, 0, r, p);  // argument validation
  MultiForm head = detail::kappa_chain_head(m, n, r, p);
  return build_table(m, n, r, p, [&](int i, int j) { return detail::kappa_chain_tail(head, m, n, r, i, j); });
}

Rational closed_form_beta(int m, int n, int r, int i, int j) {
  Integer num = factorial(m) * factorial(n) * factorial(r) * factorial(m + n - 2 * i + 1) *
                factorial(m + n - 2 * j + 1);
  Integer den = factorial(i) * factorial(j) * factorial(n - i) * factorial(m - j) * factorial(r - i - j) *
                factorial(m + n - i + 1) * factorial(m + n - j + 1);
  return make_rational(num, den);
}

SyzygyTable closed_form_table(int m, int n, int r) {
  pi_set(m, n, r);  // range checks
  SyzygyTable t{m, n, r, std::nullopt, {}};
  for (int i = 0; i <= r; ++i)
    for (int j = i; i + j <= r; ++j) {
      Rational v = -closed_form_beta(m, n, r, i, j);
      Rational swapped = closed_form_beta(m, n, r, j, i);
      v += (r + i + j) % 2 ? swapped : -swapped;
      if ((i == 0 && j == r) || (i == r && j == 0)) v += 1;
      t.coeffs[{i, j}] = i == j ? v : 2 * v;
    }
  return t;
}

U2U3 u2_u3_formulas(int m, int n) {
  if (m < 2 || n < 2) throw Error("order too small for closed formula");
  U2U3 out;
  const Integer M(m), N(n);
  out.z = {make_rational((M + N - 2) * (M + N - 1), 2 * (M - 1) * (N - 1)),
           make_rational(M * N * (M + N - 2) * (M + N - 1), (M - 1) * (N - 1) * (M + N) * (M + N)),
           make_rational((M + N - 1) * (M + N - 2) * (M - N), (M - 1) * (N - 1) * (M + N))};
  if (m >= 3 && n >= 3) {
    out.w = std::array<Rational, 3>{
        make_rational((M + N - 4) * (M + N - 3), (M - 2) * (N - 2)),
        make_rational((M + N - 3) * (M + N - 4) * (M - N), (M - 2) * (N - 2) * (M + N - 2)),
        make_rational(M * N * (M + N - 4) * (M + N - 3), (M - 2) * (N - 2) * (M + N) * (M + N - 1))};
  }
  return out;
}

BinaryForm syzygy_residual(const SyzygyTable& table, const BinaryForm& a, const BinaryForm& b) {
  const int r = table.r;
  std::vector<BinaryForm> u;
  for (int k = 0; k <= r; ++k) u.push_back(transvect(a, b, k));
  BinaryForm sum(a.pair(), 2 * (table.m + table.n - r));
  for (const auto& [key, c] : table.coeffs) {
    if (c == 0) continue;
    auto [i, j] = key;
    sum += c * transvect(u[i], u[j], r - i - j);
  }
  return sum;
}

namespace {

std::vector<Rational> primes_from(std::size_t skip, std::size_t count) {
  std::vector<Rational> out;
  std::size_t seen = 0;
  for (long k = 2; out.size() < count; ++k) {
    bool prime = true;
    for (long d = 2; d * d <= k; ++d)
      if (k % d == 0) {
        prime = false;
        break;
      }
    if (prime && seen++ >= skip) out.emplace_back(k);
  }
  return out;
}

}  // namespace

TableVerdict verify_table(const SyzygyTable& table, int trials, std::uint64_t seed, bool symbolic) {
  if (trials < 1) throw Error("trials must be at least 1");
  TableVerdict v;
  if (table.is_zero()) {
    v.reason = "zero table";
    return v;
  }
  const int m = table.m, n = table.n;
  if (symbolic) {
    auto a = BinaryForm::from_coeffs(Pair::x, primes_from(0, m + 1));
    auto b = BinaryForm::from_coeffs(Pair::x, primes_from(m + 1, n + 1));
    v.trials = 1;
    BinaryForm res = syzygy_residual(table, a, b);
    if (!res.is_zero()) {
      v.reason = "nonzero residual at prime coordinates";
      v.residual = res;
      return v;
    }
    v.pass = true;
    return v;
  }
  CounterRng root(seed);
  for (int t = 0; t < trials; ++t) {
    CounterRng rng = root.split(static_cast<std::uint64_t>(t));
    auto a = random_binary_form(rng, m);
    auto b = random_binary_form(rng, n);
    ++v.trials;
    BinaryForm res = syzygy_residual(table, a, b);
    if (!res.is_zero()) {
      v.reason = "nonzero residual in trial " + std::to_string(t);
      v.residual = res;
      return v;
    }
  }
  v.pass = true;
  return v;
}

nlohmann::json to_json(const SyzygyTable& table) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [key, c] : table.coeffs)
    coeffs.push_back({{"i", key.first}, {"j", key.second}, {"value", to_string(c)}});
  nlohmann::json j{{"m", table.m}, {"n", table.n}, {"r", table.r}, {"coeffs", coeffs}};
  if (table.point) j["point"] = {table.point->a, table.point->b};
  else j["point"] = "closed-form";
  return j;
}

SyzygyTable syzygy_table_from_json(const nlohmann::json& j) {
  SyzygyTable t;
  t.m = j.at("m").get<int>();
  t.n = j.at("n").get<int>();
  t.r = j.at("r").get<int>();
  const auto& p = j.at("point");
  if (p.is_array()) t.point = LatticePoint{p.at(0).get<int>(), p.at(1).get<int>()};
  else if (!p.is_string() || p.get<std::string>() != "closed-form") throw Error("malformed table point");
  for (const auto& c : j.at("coeffs")) {
    int i = c.at("i").get<int>(), k = c.at("j").get<int>();
    if (i < 0 || i > k || i + k > t.r) throw Error("table index outside 0 <= i <= j, i + j <= r");
    t.coeffs[{i, k}] = parse_rational(c.at("value").get<std::string>());
  }
  return t;
}

}  // namespace tvx
