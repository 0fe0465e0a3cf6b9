#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tvx/binary_form.hpp"

namespace tvx {

struct LatticePoint {
  int a = 0;
  int b = 0;
  bool operator==(const LatticePoint&) const = default;
};

/// Π(m,n;r) = {(a,b) : 2(a+b+1) ≤ r}, a then b ascending.
std::vector<LatticePoint> pi_set(int m, int n, int r);

/// κ_{i,j}^{(a,b)} from the triple-sum formula.
Rational kappa(int m, int n, int r, int i, int j, LatticePoint p);

/// The same coefficient read off the composite of symbolic operators applied
/// to z₁^{2(m+n−r)}.
Rational kappa_oracle(int m, int n, int r, int i, int j, LatticePoint p);

/// Number of lattice triples in the κ sum.
std::size_t kappa_support_size(int m, int n, int r, int i, int j, LatticePoint p);

struct SyzygyTable {
  int m = 0, n = 0, r = 0;
  std::optional<LatticePoint> point;  // empty for the closed-form syzygy
  std::map<std::pair<int, int>, Rational> coeffs;  // 0 ≤ i ≤ j, i+j ≤ r

  Rational at(int i, int j) const;
  bool is_zero() const;
  /// Multiplies every coefficient by s.
  SyzygyTable scaled(const Rational& s) const;
};

SyzygyTable vartheta_table(int m, int n, int r, LatticePoint p);

/// The table built from kappa_oracle instead of the closed sum.
SyzygyTable vartheta_table_oracle(int m, int n, int r, LatticePoint p);

SyzygyTable closed_form_table(int m, int n, int r);

/// β_{i,j} of the closed-form syzygy.
Rational closed_form_beta(int m, int n, int r, int i, int j);

struct U2U3 {
  std::array<Rational, 3> z;
  std::optional<std::array<Rational, 3>> w;  // needs m, n ≥ 3
};

/// 𝔲₀𝔲₂ = z₁(𝔲₀,𝔲₀)₂ + z₂𝔲₁² + z₃(𝔲₀,𝔲₁)₁ and
/// 𝔲₀𝔲₃ = w₁(𝔲₀,𝔲₁)₂ + w₂(𝔲₀,𝔲₂)₁ + w₃𝔲₁𝔲₂.
U2U3 u2_u3_formulas(int m, int n);

struct TableVerdict {
  bool pass = false;
  int trials = 0;
  std::string reason;
  std::optional<BinaryForm> residual;
};

/// Σ ϑ_{i,j}(𝔲_i,𝔲_j)_{r−i−j} for 𝔲_k = (A,B)_k.
BinaryForm syzygy_residual(const SyzygyTable& table, const BinaryForm& a, const BinaryForm& b);

/// Substitutes random A, B (one counter stream per trial); in symbolic mode a
/// single deterministic trial uses distinct primes as coefficients.
TableVerdict verify_table(const SyzygyTable& table, int trials, std::uint64_t seed, bool symbolic = false);

/// 𝔲₂ … 𝔲_{min(m,n)} from 𝔲₀ and 𝔲₁.
std::vector<BinaryForm> reconstruct(const BinaryForm& u0, const BinaryForm& u1, int m, int n);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

struct IdentityVerdict {
  bool pass = false;
  std::vector<IdentityCheck> checks;
  std::vector<std::string> failures() const;
};

/// The nine quadratic and cubic identities for m = n = 2.
IdentityVerdict segre22_identity_check(const BinaryForm& a, const BinaryForm& b);

/// 𝔲₁⁶ + 6H𝔲₁⁴ + (12H² − 2I𝔲₀²)𝔲₁² − 16T² = 0 for m = n = 2.
IdentityVerdict minimal_equation_u1_check(const BinaryForm& a, const BinaryForm& b);

nlohmann::json to_json(const SyzygyTable& table);
SyzygyTable syzygy_table_from_json(const nlohmann::json& j);

}  // namespace tvx
