#include "tvx/syzygy.hpp"
#include "tvx/transvectant.hpp"

namespace tvx {

std::vector<std::string> IdentityVerdict::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.holds) out.push_back(c.name);
  return out;
}

namespace {

struct Quadratics {
  BinaryForm u0, u1, u2;
};

Quadratics transvectants_22(const BinaryForm& a, const BinaryForm& b) {
  if (a.order() != 2 || b.order() != 2) throw Error("forms must be quadratic");
  return {transvect(a, b, 0), transvect(a, b, 1), transvect(a, b, 2)};
}

BinaryForm tv(const BinaryForm& f, const BinaryForm& g, int r) { return transvect(f, g, r); }

Rational q(long num, long den = 1) { return make_rational(num, den); }

void finish(IdentityVerdict& v) {
  v.pass = true;
  for (const auto& c : v.checks) v.pass = v.pass && c.holds;
}

}  // namespace

IdentityVerdict segre22_identity_check(const BinaryForm& a, const BinaryForm& b) {
  auto [u0, u1, u2] = transvectants_22(a, b);
  IdentityVerdict v;
  auto add = [&](std::string name, const BinaryForm& lhs) { v.checks.push_back({std::move(name), lhs.is_zero()}); };

  BinaryForm h = tv(u0, u0, 2);
  add("quadratic u0u2", u0 * u2 - q(3, 2) * (u1 * u1) - q(3) * h);
  add("quadratic u1u2", u1 * u2 + q(3) * tv(u0, u1, 2));
  add("quadratic u2^2", u2 * u2 - q(3, 2) * tv(u0, u0, 4) + q(3, 2) * tv(u1, u1, 2));

  BinaryForm s = u1 * u1 + q(2) * h;
  add("degree 3 set-theoretic", u1 * s + q(2) * (u0 * tv(u0, u1, 2)));
  add("degree 4 set-theoretic", s * s - q(2, 3) * (u0 * u0 * (tv(u0, u0, 4) - tv(u1, u1, 2))));

  add("cubic order 2 (first)", tv(u1 * u1, u1, 2) + q(2) * tv(tv(u0, u1, 2), u0, 2) + q(2) * tv(h, u1, 2));
  add("cubic order 2 (second)", tv(tv(u0, u1, 1), u1, 2));

  add("cubic order 6 (first)", u1 * u1 * u1 + q(9) * (u0 * tv(u0, u1, 2)) - q(7) * tv(u0 * u0, u1, 2));
  add("cubic order 6 (second)", q(3) * (u1 * tv(u0, u1, 1)) + q(7) * tv(u0 * u0, u0, 3));
  finish(v);
  return v;
}

IdentityVerdict minimal_equation_u1_check(const BinaryForm& a, const BinaryForm& b) {
  auto [u0, u1, u2] = transvectants_22(a, b);
  (void)u2;
  BinaryForm h = tv(u0, u0, 2), i = tv(u0, u0, 4), t = tv(u0, h, 1);
  BinaryForm u1sq = u1 * u1;
  BinaryForm lhs = pow(u1sq, 3) + q(6) * (h * u1sq * u1sq) + (q(12) * (h * h) - q(2) * (i * u0 * u0)) * u1sq -
                   q(16) * (t * t);
  IdentityVerdict v;
  v.checks.push_back({"sextic for u1", lhs.is_zero()});
  finish(v);
  return v;
}

}  // namespace tvx
