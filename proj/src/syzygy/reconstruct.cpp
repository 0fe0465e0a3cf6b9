#include <algorithm>

#include "tvx/syzygy.hpp"
#include "tvx/transvectant.hpp"

namespace tvx {

std::vector<BinaryForm> reconstruct(const BinaryForm& u0, const BinaryForm& u1, int m, int n) {
  if (m < 1 || n < 1) throw Error("reconstruction needs m, n >= 1");
  if (u0.order() != m + n || u1.order() != m + n - 2) throw Error("orders of u0, u1 do not match m + n");
  if (u0.pair() != u1.pair()) throw Error("binary forms over different pairs");
  if (u0.is_zero()) throw Error("u0 must be nonzero");

  std::vector<BinaryForm> u{u0, u1};
  for (int r = 2; r <= std::min(m, n); ++r) {
    SyzygyTable table = vartheta_table(m, n, r, {0, 0});
    Rational lead = table.at(0, r);
    BinaryForm rest(u0.pair(), 2 * (m + n - r));
    for (const auto& [key, c] : table.coeffs) {
      auto [i, j] = key;
      if ((i == 0 && j == r) || c == 0) continue;
      rest += c * transvect(u[i], u[j], r - i - j);
    }
    BinaryForm next(u0.pair(), m + n - 2 * r);
    if (!rest.is_zero()) {
      try {
        next = exact_divide(rest, u0);
      } catch (const Error&) {
        throw Error("inputs are not transvectants of a common pair");
      }
      next *= -1 / lead;
    }
    if (next.order() != m + n - 2 * r) throw Error("inputs are not transvectants of a common pair");
    u.push_back(next);
  }
  return {u.begin() + 2, u.end()};
}

}  // namespace tvx
