#pragma once

#include "tvx/binary_form.hpp"

namespace tvx {

/// 𝖿(m,n;r) = (m−r)!(n−r)!/(m!n!).
Rational factor_f(int m, int n, int r);
/// 𝗀(m,n;r) = C(m,r)C(n,r)/C(m+n−r+1,r).
Rational factor_g(int m, int n, int r);
/// 𝗁 = 𝖿·𝗀 = (m+n−2r+1)!/((m+n−r+1)! r!).
Rational factor_h(int m, int n, int r);

/// (A,B)_r through the Omega operator: 𝖿·[Ω_xy^r A(x)B(y)]_{y→x}.
BinaryForm transvect(const BinaryForm& a, const BinaryForm& b, int r);

/// (A,B)_r from the sum of products of partial derivatives.
BinaryForm transvect_by_derivatives(const BinaryForm& a, const BinaryForm& b, int r);

/// π_r on a form bihomogeneous of orders (m,n) in pairs (x,y); the result lives in x.
BinaryForm project_pi(const MultiForm& f, int r);

/// ι_r(C), bihomogeneous of orders (m,n) in (x,y), with π_r(ι_r(C)) = C.
MultiForm section_iota(const BinaryForm& c, int m, int n, int r);

/// (xy)^m.
MultiForm trace_element(int m);

struct JacobianVerdict {
  bool holds = false;
  BinaryForm lhs;
  BinaryForm rhs;
};

/// (AQ,BR)₁ − (AR,BQ)₁ against s(m+n+2s)/((m+s)(n+s))·AB·(Q,R)₁.
JacobianVerdict jacobian_exchange_check(const BinaryForm& a, const BinaryForm& b, const BinaryForm& q,
                                        const BinaryForm& r);

}  // namespace tvx
