#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phq/lie_algebra.hpp"
#include "phq/linalg.hpp"
#include "phq/report.hpp"

namespace phq {

/// A Lie algebra together with a linear map J meant to be a complex
/// structure (J^2 = -I, vanishing Nijenhuis tensor). Nothing is verified at
/// construction beyond shapes; use check_complex.
struct ComplexLieAlgebra {
  LieAlgebra algebra;
  Matrix J;
};

/// Pseudo-Hermitian quadratic Lie algebra (g, J, phi). The constructor only
/// enforces matching shapes; check_phq verifies the axioms.
class PHQAlgebra {
 public:
  PHQAlgebra() = default;
  PHQAlgebra(LieAlgebra algebra, Matrix j, Matrix phi);

  std::size_t dim() const noexcept { return algebra_.dim(); }
  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const Matrix& J() const noexcept { return j_; }
  const Matrix& phi() const noexcept { return phi_; }

  friend bool operator==(const PHQAlgebra&, const PHQAlgebra&) = default;

 private:
  LieAlgebra algebra_;
  Matrix j_;
  Matrix phi_;
};

/// N_J(x,y) = [x,y] + J[Jx,y] + J[x,Jy] - [Jx,Jy]
Vector nijenhuis(const LieAlgebra& lie, const Matrix& j, const Vector& x, const Vector& y);

/// Checks "J^2=-I" and "nijenhuis" on all basis pairs; when J^2 = -I it also
/// confirms N_J(Jx,Jy) = -N_J(x,y) and N_J(Jx,y) = -J N_J(x,y) on the same
/// pairs ("nijenhuis-identities"). Throws Error(OddDimension).
Report check_complex(const LieAlgebra& lie, const Matrix& j);

/// Checks "symmetric", "nondegenerate" and "ad-invariant"
/// (phi([x,y],z) + phi(y,[x,z]) = 0 on all basis triples).
Report check_quadratic(const LieAlgebra& lie, const Matrix& g);

/// All axioms of a pseudo-Hermitian quadratic Lie algebra: jacobi, the
/// complex-structure checks, the quadratic checks and "J-compatible"
/// (J^T G J = G). Never throws on bad data; an odd dimension fails the J checks.
Report check_phq(const PHQAlgebra& p);

/// Kähler form omega(x,y) = phi(x, Jy) as the matrix G*J.
Matrix kahler_form(const PHQAlgebra& p);

/// The algebra with bracket [x,y]_J = [Jx,y] + [x,Jy].
LieAlgebra j_twisted_bracket(const LieAlgebra& lie, const Matrix& j);

struct JClass {
  bool abelian = false;       // [Jx,Jy] = [x,y]
  bool bi_invariant = false;  // [Jx,y] = J[x,y]

  bool generic() const noexcept { return !abelian && !bi_invariant; }
};

JClass j_class(const LieAlgebra& lie, const Matrix& j);

enum class FingerprintField { dim, dim_derived, dim_center, nilpotency_index, sig_phi, sig_phi_on_derived };

std::string_view to_string(FingerprintField field);

/// Isomorphism invariants of a pHQ algebra.
struct Fingerprint {
  std::size_t dim = 0;
  std::size_t dim_derived = 0;
  std::size_t dim_center = 0;
  std::optional<std::size_t> nilpotency_index;  // nullopt: not nilpotent
  Signature sig_phi;
  Signature sig_phi_on_derived;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  /// "dim | dim[g,g] | sig(phi) | sig(phi on [g,g]) | nilpotency index"
  std::string table_row() const;
};

/// First field on which a and b differ, compared in the order dim, sig_phi,
/// dim_center, sig_phi_on_derived, dim_derived, nilpotency_index.
std::optional<FingerprintField> first_difference(const Fingerprint& a, const Fingerprint& b);

/// The restricted signature is computed on the echelon basis of [g,g].
Fingerprint fingerprint(const PHQAlgebra& p);

/// "salamon": dim([g,g] + J[g,g]) < dim g.
Report salamon_check(const PHQAlgebra& p);

/// Restriction of `p` to the subspace spanned by the columns of `basis`,
/// which must be an ideal-closed, J-invariant subspace (a subalgebra closed
/// under J). Throws Error(InvalidParameter) otherwise.
PHQAlgebra restrict_to(const PHQAlgebra& p, const Matrix& basis, std::vector<std::string> names);

/// Same algebra written in a new basis (columns of `basis`, invertible).
PHQAlgebra change_basis(const PHQAlgebra& p, const Matrix& basis, std::vector<std::string> names);

/// Names for a subspace basis: keeps the ambient name of a basis vector when
/// it is a standard unit vector, otherwise "<prefix><i>".
std::vector<std::string> subspace_names(const std::vector<std::string>& ambient, const Matrix& basis,
                                        const std::string& prefix);

}  // namespace phq
