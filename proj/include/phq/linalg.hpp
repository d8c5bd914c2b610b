#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phq/matrix.hpp"

namespace phq {

struct EchelonForm {
  Matrix reduced;                    // reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

EchelonForm rref(Matrix a);
std::size_t rank(const Matrix& a);
Rational determinant(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

/// Some x with a*x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero, so the answer is the minimal-support solution
/// for the column order of `a`.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Linear subspace of Q^n. The basis is kept in reduced row-echelon form
/// (one basis vector per row), so two subspaces are equal iff their bases are
/// equal entry by entry.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& rows);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }

  /// Echelon basis as rows.
  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> vectors() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  Matrix basis_;
};

Subspace kernel(const Matrix& a);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
/// Image of a subspace under a linear map (matrix acting on columns).
Subspace image(const Matrix& map, const Subspace& u);
/// {x : u^T G x = 0 for every u in U}.
Subspace orthogonal_complement(const Subspace& u, const Matrix& g);

/// Coordinates of v in the basis formed by the columns of `basis`, or nullopt
/// if v is not in their span. The columns must be linearly independent.
std::optional<Vector> coordinates(const Matrix& basis, const Vector& v);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

Signature operator+(const Signature& a, const Signature& b);
/// "(p,q)"
std::string to_string(const Signature& s);

/// Sylvester inertia of a symmetric matrix by congruence diagonalization.
/// A nonzero diagonal entry is used as a 1x1 pivot; when the remaining
/// diagonal is zero, an off-diagonal hyperbolic block [[0,a],[a,0]] is used
/// and contributes (1,1). Throws Error(NotSymmetric).
Signature signature(const Matrix& g);

}  // namespace phq
