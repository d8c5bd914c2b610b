#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phq/linalg.hpp"
#include "phq/report.hpp"

namespace phq {

/// Full structure tensor c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.
class StructureConstants {
 public:
  explicit StructureConstants(std::size_t dim = 0);

  std::size_t dim() const noexcept { return dim_; }

  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return values_[(i * dim_ + j) * dim_ + k];
  }
  Rational& raw(std::size_t i, std::size_t j, std::size_t k) { return values_[(i * dim_ + j) * dim_ + k]; }

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  /// Adds `value` to the e_k coefficient of [e_i, e_j] (and its negative to [e_j, e_i]).
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t dim_;
  std::vector<Rational> values_;
};

/// Finite-dimensional Lie algebra given by structure constants over a named
/// basis. Antisymmetry is enforced at construction; the Jacobi identity is
/// not assumed and can be verified with check_jacobi.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::vector<std::string> basis_names, StructureConstants constants);

  static LieAlgebra abelian(std::vector<std::string> basis_names);
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const StructureConstants& constants() const noexcept { return c_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }

  /// [e_i, e_j] as a coordinate vector.
  Vector basis_bracket(std::size_t i, std::size_t j) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::vector<std::string> names_;
  StructureConstants c_;
};

/// Default basis names e1, ..., en.
std::vector<std::string> default_basis_names(std::size_t dim);

Vector bracket(const LieAlgebra& lie, const Vector& x, const Vector& y);

struct JacobiViolation {
  std::size_t i, j, k;  // zero-based, i < j < k
  Vector residual;
};

struct JacobiReport {
  std::vector<JacobiViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
  Check as_check() const;
};

/// Evaluates the Jacobi sum on every basis triple i < j < k.
JacobiReport check_jacobi(const LieAlgebra& lie);

/// Matrix of y -> [x, y].
Matrix adjoint(const LieAlgebra& lie, const Vector& x);

Subspace center(const LieAlgebra& lie);
/// Span of all brackets [e_i, e_j].
Subspace derived(const LieAlgebra& lie);
/// [L, U] for a subspace U.
Subspace bracket_with_algebra(const LieAlgebra& lie, const Subspace& u);
bool is_abelian(const LieAlgebra& lie);

/// Number of nonzero terms of the lower central series C^1 = L,
/// C^{i+1} = [L, C^i]; so an abelian algebra has index 1 and a k-step
/// nilpotent one index k. The zero algebra has index 0. nullopt when the
/// series stabilizes at a nonzero ideal (not nilpotent).
std::optional<std::size_t> nilpotency_index(const LieAlgebra& lie);

/// Checks M[e_i, e_j] = [M e_i, e_j] + [e_i, M e_j] for all i < j.
Report is_derivation(const LieAlgebra& lie, const Matrix& map);

/// Some s with adjoint(s) = map (free coordinates set to zero), or nullopt if
/// `map` is not inner. All solutions form s + center.
std::optional<Vector> solve_inner(const LieAlgebra& lie, const Matrix& map);

/// Structure constants of the same algebra written in a new basis whose
/// vectors are the columns of `basis` (must be invertible).
LieAlgebra change_basis(const LieAlgebra& lie, const Matrix& basis, std::vector<std::string> names);

}  // namespace phq
