#pragma once

#include <optional>
#include <vector>

#include "phq/constructions.hpp"
#include "phq/structures.hpp"

namespace phq {

enum class PairKind {
  derived,   // z in center ∩ J(center) ∩ [g,g], hence isotropic
  definite,  // phi(z,z) != 0, so span{z, Jz} is a definite central plane
  stuck,     // W contains only isotropic vectors, none of them in [g,g]
};

struct CentralPair {
  Subspace w;  // center ∩ J(center)
  PairKind kind = PairKind::stuck;
  Vector z;    // empty when stuck
};

/// Deterministic choice: first echelon vector of W ∩ [g,g]; otherwise the
/// first echelon vector of W, then pairwise sum, of nonzero norm.
/// Throws Error(EmptyIntersection) when W = 0.
CentralPair find_central_pair(const PHQAlgebra& p);

/// Vector of nonzero norm in `w` found by the scan above, if any.
std::optional<Vector> nonisotropic_vector(const Subspace& w, const Matrix& g);

struct SplitResult {
  PHQAlgebra complement;  // restriction to span{z, Jz}^⊥
  int sign = 0;           // sign of phi(z,z)
  Matrix basis;           // columns: echelon basis of the complement
};

/// Throws Error(NotDefinitePlane) unless z, Jz are central and phi(z,z) != 0.
SplitResult split_plane(const PHQAlgebra& p, const Vector& z);

enum class StepKind { split_plane, plane_reduction };

struct ReductionStep {
  StepKind kind = StepKind::split_plane;
  PHQAlgebra input;
  Vector z;
  Vector v;  // plane_reduction only
  int sign = 0;  // split_plane only
  PHQAlgebra recovered;
  std::optional<ExtensionData> extension;
  /// Columns expressed in the input's coordinates. For a plane reduction
  /// this is the adapted basis (z, Jz, base..., Jv, v), which maps the
  /// re-extension onto the input.
  Matrix basis;
};

/// Inverse double extension by the plane through z. Throws
/// Error(InvalidCentralElement) unless z != 0, z and Jz are central and
/// z in [g,g]; Error(NonIsotropic) if phi(z,z) != 0.
ReductionStep reduce_by_plane(const PHQAlgebra& p, const Vector& z);

struct Reduction {
  std::vector<ReductionStep> steps;
  PHQAlgebra residue;  // abelian
};

/// Repeats find_central_pair + reduce_by_plane/split_plane until abelian.
/// Throws Error(ReductionStuck) and Error(NotNilpotent).
Reduction full_reduction(const PHQAlgebra& p);

struct Peeled {
  std::vector<ReductionStep> steps;  // all split_plane
  PHQAlgebra core;                   // no definite central J-plane left
  Signature removed;                 // signature of the peeled planes
};

/// Splits off definite central J-planes for as long as any exist.
Peeled peel_definite_planes(const PHQAlgebra& p);

struct SkewPairAnalysis {
  Subspace kernel;  // Ker F
  Matrix adapted;   // columns u1, Ju1, u2, Ju2
  Rational a;       // F u2 = a J u1
  Rational b;       // D u2 = b J u1
  Report checks;
};

/// Structure of a nilpotent skew pair (F, D) on a neutral 4-dimensional
/// base. Throws Error(HypothesisViolated) naming the failed condition.
SkewPairAnalysis analyze_skew_pair(const PHQAlgebra& base, const Matrix& f, const Matrix& d);

}  // namespace phq
