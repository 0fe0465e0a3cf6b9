#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvx/linalg.hpp"

namespace tvx {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int size() const;
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

/// "3,2" or "3 2" or "(3,2)"; throws on a non-partition.
Partition parse_partition(std::string_view text);
std::string to_string(const Partition& p);
std::vector<Partition> partitions_of(int d);

/// A permutation of {0, …, d−1} in one-line form: i ↦ perm[i].
using Permutation = std::vector<int>;

Permutation compose(const Permutation& a, const Permutation& b);  // a∘b
Permutation inverse(const Permutation& p);
std::vector<Permutation> all_permutations(int d);

struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // entries 1..d

  std::vector<int> reading_word() const;
  bool operator==(const StandardTableau&) const = default;
};

std::string to_string(const StandardTableau& t);
StandardTableau parse_tableau(std::string_view text);  // "1 2 3/4 5"

/// All standard tableaux of the shape in lexicographic order of reading words.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);
Integer hook_length_dimension(const Partition& shape);

/// χ_λ on the class of cycle type ρ (Murnaghan–Nakayama).
Integer character(const Partition& lambda, const Partition& rho);
Integer class_size(const Partition& rho);
Partition cycle_type(const Permutation& p);

/// Young's natural representation: row k of the matrix holds the coordinates
/// of g·e_{T_k} in the standard polytabloid basis, so that v ↦ v·Q(g) is the
/// action on coordinate row vectors.
class NaturalRepresentation {
 public:
  explicit NaturalRepresentation(const Partition& shape);

  const Partition& shape() const { return shape_; }
  const std::vector<StandardTableau>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  Matrix matrix(const Permutation& g) const;

 private:
  std::vector<Rational> standard_restriction(const std::vector<int>& filling) const;

  Partition shape_;
  int d_;
  std::vector<StandardTableau> basis_;
  std::vector<int> row_of_cell_;  // cell index → row
  std::vector<std::vector<int>> columns_;  // cell indices per column
  std::vector<std::pair<std::vector<int>, int>> standard_tabloids_;  // row word → basis index, sorted
  Matrix restriction_inverse_;
};

struct RepMatrix {
  Partition shape;
  std::string label;
  Matrix matrix;
};

struct GeneratorMatrices {
  RepMatrix transposition;  // (1,2)
  RepMatrix long_cycle;     // (1,2,…,d)
};

/// Matrices of (1,2) and (1,2,…,d); s² = 1, c^d = 1 and (sc)^(d−1) = 1 are checked.
GeneratorMatrices generator_matrices(const Partition& shape);

/// λ∘μ∘ν, the multiplicity of V_ν in V_λ ⊗ V_μ.
Integer multiplicity(const Partition& lambda, const Partition& mu, const Partition& nu);

/// M with M·Q_ν(g) = (Q_λ(g) ⊗ Q_μ(g))·M; rows indexed by basis pairs (λ index major).
/// Scaled to a primitive integer matrix whose first nonzero entry is positive.
Matrix projection_matrix(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Whether M is equivariant for the given group element.
bool is_equivariant(const Matrix& m, const Partition& lambda, const Partition& mu, const Partition& nu,
                    const Permutation& g);

struct AnchorReport {
  std::string map;
  Rational expected;
  Rational found;  // entry of the primitive matrix before rescaling
};

struct RelationReport {
  int d = 0;
  Integer mult_22;   // (d−2,2)∘(d−2,2)∘(d−1,1)
  Integer mult_211;  // (d−2,1,1)∘(d−2,1,1)∘(d−1,1)
  std::vector<AnchorReport> anchors;
  std::vector<Rational> coefficients;  // c₁..c₄, primitive, c₁ > 0 when nonzero
  std::size_t relation_dimension = 0;
  bool pass = false;
  std::string detail;
};

/// Solves for the relation c₁π₁(z₁⊗z₁) + c₂η₁(z₁⊗z₂) + c₃η₂(z₂⊗z₂) + c₄z₁z₃ = 0 at z = π(e_a⊗e_b)
/// for all basis pairs, with the maps normalized by the anchor entries (−3, 2, 2, −2, 2).
RelationReport test_conjecture(int d);

struct S5Verdict {
  bool pass = false;
  std::array<Rational, 4> coefficients{};
  bool anchored = false;  // relation holds with the anchor normalization
  bool raw = false;       // relation holds with the primitive (unanchored) matrices
  RelationReport relation;
  std::string detail;
};

/// Checks the given coefficients (default 32, 100, 25, −180) on every basis tensor e_a⊗e_b of
/// V_(4,1) ⊗ V_(4,1), with both the anchored and the raw normalizations.
S5Verdict verify_s5_syzygy(const std::array<Rational, 4>& coefficients = {32, 100, 25, -180});

}  // namespace tvx
