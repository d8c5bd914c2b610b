#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phq/reduction.hpp"
#include "phq/structures.hpp"

namespace phq {

/// Kodaira-Thurston algebra: [x1,x2] = x3, J x1 = x2, J x3 = x4. It carries
/// no invariant metric, so it comes without one.
ComplexLieAlgebra kodaira();

/// The 6-dimensional algebra on (x1, Jx1, x2, Jx2, x3, Jx3) with
/// [x1,Jx1] = x2, [x1,x2] = -Jx3, [Jx1,x2] = x3 and
/// phi(x1,x3) = phi(Jx1,Jx3) = phi(x2,x2) = phi(Jx2,Jx2) = 1 (signature
/// (4,2)); `opposite` negates the metric (signature (2,4)).
PHQAlgebra lorentz_algebra(bool opposite = false);

/// Abelian algebra of signature (p,q), p and q even, positive planes first,
/// J e_{2i-1} = e_{2i}. Throws Error(InvalidParameter) for odd p or q.
PHQAlgebra abelian_phq(std::size_t p, std::size_t q);

/// T*-extension of the Kodaira-Thurston algebra by sum_i alpha_i theta_i.
PHQAlgebra tstar_kodaira(const Vector& alphas);

enum class Indecomposable { L42, L24, Tstar0K, TstarTheta3K };

std::string_view to_string(Indecomposable factor);

/// Sorted non-abelian factors plus one merged abelian summand R(p,q).
struct CatalogLabel {
  std::vector<Indecomposable> factors;
  Signature abelian;

  friend bool operator==(const CatalogLabel&, const CatalogLabel&) = default;
};

/// Accepts "+"-separated terms L(4,2), L(2,4), Tstar0K, TstarTheta3K and
/// R(p,q) in any order; repeated R terms are merged. Throws
/// Error(UnknownLabel).
CatalogLabel parse_label(std::string_view text);

/// Canonical form, e.g. "L(2,4)+R(2,0)" or "R(0,0)" for the zero algebra.
std::string to_string(const CatalogLabel& label);

/// Direct sum of the factors in canonical order, abelian part last.
PHQAlgebra build(const CatalogLabel& label);
PHQAlgebra build(std::string_view label);

struct Classification {
  CatalogLabel label;
  Fingerprint fingerprint;       // of the input
  Fingerprint core_fingerprint;  // after peeling definite central planes
  Peeled peeled;
  Reduction reduction;
};

/// Throws Error(DimensionTooLarge) above dimension 8, Error(InvalidStructure)
/// when check_phq fails, Error(NotNilpotent) and
/// Error(UnclassifiedFingerprint).
Classification classify(const PHQAlgebra& p);

/// Checks "invertible", "J" (W J_A = J_B W), "metric" (W^T G_B W = G_A) and
/// "bracket" (W[x,y]_A = [Wx,Wy]_B on basis pairs). W maps A-coordinates to
/// B-coordinates.
Report verify_witness(const PHQAlgebra& a, const PHQAlgebra& b, const Matrix& w);

struct Inequivalence {
  std::optional<FingerprintField> field;  // nullopt: NoInvariantSeparation
  Report report;
};

Inequivalence inequivalence_evidence(const PHQAlgebra& a, const PHQAlgebra& b);

}  // namespace phq
