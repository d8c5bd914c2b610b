#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "phq/lie_algebra.hpp"
#include "phq/report.hpp"
#include "phq/structures.hpp"

namespace phq {

/// Lie algebra with an invariant symmetric form, no complex structure.
struct QuadraticAlgebra {
  LieAlgebra algebra;
  Matrix phi;
};

/// Basis (z, L..., v) with [x,y] = [x,y]_0 + phi_0(Dx,y) z, [v,x] = Dx and
/// phi(z,v) = 1. Throws Error(InvalidDerivation) unless D is a phi_0-skew
/// derivation.
QuadraticAlgebra line_double_extension(const QuadraticAlgebra& q, const Matrix& d);

/// theta(e_i, e_j)(e_k), antisymmetric in the first two slots.
class Cocycle {
 public:
  explicit Cocycle(std::size_t dim = 0);

  std::size_t dim() const noexcept { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return values_[(i * dim_ + j) * dim_ + k];
  }
  /// Sets theta(e_i,e_j)(e_k) = value and theta(e_j,e_i)(e_k) = -value.
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

  /// theta(x, y) as coordinates in the dual basis.
  Vector evaluate(const Vector& x, const Vector& y) const;

  friend bool operator==(const Cocycle&, const Cocycle&) = default;
  friend Cocycle operator+(const Cocycle& a, const Cocycle& b);
  friend Cocycle operator*(const Rational& s, const Cocycle& a);

 private:
  std::size_t dim_;
  std::vector<Rational> values_;
};

/// Checks "cyclic" (theta(x,y)z = theta(y,z)x), "cocycle" (coadjoint
/// Chevalley-Eilenberg differential vanishes on every basis triple and dual
/// slot) and "J-compatible" (theta(x,y)z = theta(Jx,Jy)z + theta(Jy,Jz)x +
/// theta(Jz,Jx)y) on all basis triples.
Report check_cocycle(const LieAlgebra& lie, const Matrix& j, const Cocycle& theta);

/// Cotangent extension on g + g* with basis (x_1..x_n, x_1*..x_n*), hyperbolic
/// pairing phi(x_i, x_j*) = delta_ij and J_T(x + f) = Jx - f o J.
/// Throws Error(InvalidStructure) if J is not a complex structure and
/// Error(InvalidCocycle) if theta fails check_cocycle.
PHQAlgebra tstar_extension(const LieAlgebra& lie, const Matrix& j, const Cocycle& theta);

/// The four cocycles theta_1..theta_4 spanning the cyclic 2-cocycles of the
/// Kodaira-Thurston algebra.
std::vector<Cocycle> kodaira_cocycle_basis();

/// sum_i coeffs[i] * basis[i]
Cocycle combine(const std::vector<Cocycle>& basis, const Vector& coeffs);

/// Finite-dimensional commutative associative algebra with an invariant
/// nondegenerate symmetric form B.
class CommutativeAlgebra {
 public:
  CommutativeAlgebra(std::vector<std::string> names, std::vector<Rational> products, Matrix b);

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Coefficient of a_k in a_i a_j.
  const Rational& product(std::size_t i, std::size_t j, std::size_t k) const {
    return products_[(i * dim() + j) * dim() + k];
  }
  const Matrix& B() const noexcept { return b_; }

  /// "commutative", "associative", "symmetric", "nondegenerate", "invariant".
  Report validate() const;

 private:
  std::vector<std::string> names_;
  std::vector<Rational> products_;
  Matrix b_;
};

/// a^i a^j = a^(i+j) when i+j <= k, B(a^i,a^j) = delta_{i+j,k+1}.
/// Throws Error(InvalidParameter) for k = 0.
CommutativeAlgebra truncated_poly(std::size_t k);

/// Basis {1, i}, i^2 = -1, B(a,b) = Re(ab).
CommutativeAlgebra complex_numbers();

/// Bracket [x(a), y(b)] = [x,y](ab), J' = J (x) id, phi' = phi (x) B on the
/// basis e_i (x) a_j, index i * dim(A) + j. Throws Error(InvalidAlgebraData).
PHQAlgebra tensor_construct(const PHQAlgebra& p, const CommutativeAlgebra& a);

PHQAlgebra complexify(const PHQAlgebra& p);

/// Block-diagonal sum; colliding basis names of q get primes appended.
PHQAlgebra direct_sum(const PHQAlgebra& p, const PHQAlgebra& q);

/// Checks "D-skew", "F-skew", "D-derivation", "F-derivation",
/// "[F+JD,J]=0" and "[F,D]=ad(s0)". Throws Error(DimensionMismatch) on shapes.
Report validate_extension_data(const PHQAlgebra& base, const Matrix& d, const Matrix& f, const Vector& s0);

/// Data of a double extension by a plane. Validated on construction; throws
/// Error(InvalidExtensionData) naming the first violated condition.
class ExtensionData {
 public:
  ExtensionData(PHQAlgebra base, Matrix d, Matrix f, Vector s0);

  const PHQAlgebra& base() const noexcept { return base_; }
  const Matrix& D() const noexcept { return d_; }
  const Matrix& F() const noexcept { return f_; }
  const Vector& s0() const noexcept { return s0_; }

  friend bool operator==(const ExtensionData&, const ExtensionData&) = default;

 private:
  PHQAlgebra base_;
  Matrix d_;
  Matrix f_;
  Vector s0_;
};

/// Basis (z, z', base..., v', v), Jz = z', Jv = v', phi(z,v) = phi(z',v') = 1;
/// [v,v'] = s0, [v,x] = Fx - phi_0(s0,x) z', [v',x] = Dx + phi_0(s0,x) z and
/// [x,y] = [x,y]_0 + phi_0(Dx,y) z' + phi_0(Fx,y) z.
PHQAlgebra phq_double_extension(const ExtensionData& e);

/// (D, F, s0) -> (-F, D, s0).
ExtensionData swap_DF(const ExtensionData& e);

/// Isomorphism from the extension by swap_DF(e) onto the extension by e:
/// z1 -> z', z1' -> -z, v1 -> v', v1' -> -v, identity on the base.
Matrix swap_witness(const ExtensionData& e);

/// Makes every name unique by appending primes to repeats.
std::vector<std::string> unique_names(std::vector<std::string> names);

}  // namespace phq
