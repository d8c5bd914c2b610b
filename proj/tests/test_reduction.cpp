#include <gtest/gtest.h>

#include "phq/catalog.hpp"
#include "phq/error.hpp"
#include "phq/reduction.hpp"

using namespace phq;

namespace {

ErrorKind kind_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

PHQAlgebra adapted_neutral_base() {
  Matrix j(4, 4), g(4, 4);
  j(1, 0) = 1;
  j(0, 1) = -1;
  j(3, 2) = 1;
  j(2, 3) = -1;
  g(0, 2) = g(2, 0) = 1;
  g(1, 3) = g(3, 1) = 1;
  return PHQAlgebra(LieAlgebra({"u1", "Ju1", "u2", "Ju2"}, StructureConstants(4)), j, g);
}

Matrix skew_pair_map(const Rational& a) {
  Matrix f(4, 4);
  f(1, 2) = a;
  f(0, 3) = -a;
  return f;
}

void expect_round_trip(const ReductionStep& step) {
  ASSERT_EQ(step.kind, StepKind::plane_reduction);
  ASSERT_TRUE(step.extension.has_value());
  const PHQAlgebra again = phq_double_extension(*step.extension);
  EXPECT_EQ(fingerprint(again), fingerprint(step.input));
  const Report w = verify_witness(again, step.input, step.basis);
  EXPECT_TRUE(w.passed()) << w.to_text();
}

}  // namespace

TEST(CentralPair, AbelianPicksFirstBasisVector) {
  const CentralPair c = find_central_pair(build("R(2,2)"));
  EXPECT_EQ(c.w.dim(), 4u);
  EXPECT_EQ(c.kind, PairKind::definite);
  EXPECT_EQ(c.z, unit_vector(4, 0));
}

TEST(CentralPair, LorentzPicksX3InDerived) {
  const CentralPair c = find_central_pair(build("L(4,2)"));
  EXPECT_EQ(c.kind, PairKind::derived);
  EXPECT_EQ(c.z, unit_vector(6, 4));  // x3
  EXPECT_TRUE(c.w.contains(unit_vector(6, 5)));
}

TEST(CentralPair, Tstar0FollowsTheEchelonRule) {
  // W ∩ [g,g] = span{x3, x1*, x2*}; its first echelon vector is x3.
  const PHQAlgebra t = build("Tstar0K");
  const CentralPair c = find_central_pair(t);
  EXPECT_EQ(c.kind, PairKind::derived);
  EXPECT_EQ(intersect(c.w, derived(t.algebra())),
            Subspace::span(8, {unit_vector(8, 2), unit_vector(8, 4), unit_vector(8, 5)}));
  EXPECT_EQ(c.z, unit_vector(8, 2));
  EXPECT_EQ(bilinear(t.phi(), c.z, c.z), 0);
}

TEST(CentralPair, EmptyIntersectionWithoutCenter) {
  // aff(1): [e1,e2] = e2 has trivial center.
  StructureConstants s(2);
  s.add(0, 1, 1, 1);
  const PHQAlgebra p(LieAlgebra(default_basis_names(2), s), Matrix{{0, -1}, {1, 0}}, Matrix::identity(2));
  EXPECT_EQ(kind_of([&] { find_central_pair(p); }), ErrorKind::EmptyIntersection);
}

TEST(SplitPlane, AbelianAndLorentzSum) {
  const SplitResult a = split_plane(build("R(2,4)"), unit_vector(6, 0));
  EXPECT_EQ(a.sign, 1);
  EXPECT_EQ(signature(a.complement.phi()), (Signature{0, 4}));

  const PHQAlgebra s = build("L(4,2)+R(2,0)");
  const SplitResult b = split_plane(s, unit_vector(8, 6));
  EXPECT_EQ(b.sign, 1);
  EXPECT_EQ(b.complement, build("L(4,2)"));

  EXPECT_EQ(kind_of([&] { split_plane(s, unit_vector(8, 4)); }), ErrorKind::NotDefinitePlane);
  EXPECT_EQ(kind_of([&] { split_plane(s, unit_vector(8, 0)); }), ErrorKind::NotDefinitePlane);
}

TEST(ReduceByPlane, Preconditions) {
  EXPECT_EQ(kind_of([] { reduce_by_plane(build("R(4,4)"), Vector{1, 0, 0, 0, 1, 0, 0, 0}); }),
            ErrorKind::InvalidCentralElement);
  EXPECT_EQ(kind_of([] { reduce_by_plane(build("R(4,4)"), unit_vector(8, 0)); }), ErrorKind::NonIsotropic);
  EXPECT_EQ(kind_of([] { reduce_by_plane(build("L(4,2)"), unit_vector(6, 0)); }), ErrorKind::InvalidCentralElement);
  EXPECT_EQ(kind_of([] { reduce_by_plane(build("L(4,2)"), zero_vector(6)); }), ErrorKind::InvalidCentralElement);
}

TEST(ReduceByPlane, LorentzPlusNegativePlane) {
  const PHQAlgebra p = build("L(4,2)+R(0,2)");
  const ReductionStep step = reduce_by_plane(p, unit_vector(8, 4));
  EXPECT_EQ(step.recovered.dim(), 4u);
  EXPECT_EQ(signature(step.recovered.phi()), (Signature{2, 2}));
  EXPECT_TRUE(step.extension->D().is_zero());
  EXPECT_TRUE(step.extension->F().is_zero());
  const Vector& s0 = step.extension->s0();
  EXPECT_GT(bilinear(step.recovered.phi(), s0, s0), 0);
  expect_round_trip(step);
}

TEST(ReduceByPlane, TstarTheta3ByX1Star) {
  const PHQAlgebra t = build("TstarTheta3K");
  const ReductionStep step = reduce_by_plane(t, unit_vector(8, 4));
  EXPECT_EQ(step.recovered.dim(), 4u);
  EXPECT_EQ(signature(step.recovered.phi()), (Signature{2, 2}));
  EXPECT_FALSE(step.extension->F().is_zero());
  EXPECT_TRUE(validate_extension_data(step.recovered, step.extension->D(), step.extension->F(),
                                      step.extension->s0())
                  .passed());
  expect_round_trip(step);
}

TEST(FullReduction, Examples) {
  const Reduction a = full_reduction(build("R(2,2)"));
  EXPECT_TRUE(a.steps.empty());
  EXPECT_EQ(a.residue, build("R(2,2)"));

  const Reduction l = full_reduction(build("L(4,2)"));
  ASSERT_EQ(l.steps.size(), 1u);
  EXPECT_EQ(l.steps[0].kind, StepKind::plane_reduction);
  EXPECT_EQ(signature(l.residue.phi()), (Signature{2, 0}));
  expect_round_trip(l.steps[0]);

  const Reduction t = full_reduction(build("Tstar0K"));
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.residue.dim(), 4u);
  expect_round_trip(t.steps[0]);
}

TEST(FullReduction, DimensionBookkeeping) {
  for (const char* label : {"L(4,2)+R(2,0)", "L(2,4)+R(0,2)", "TstarTheta3K", "Tstar0K", "R(2,4)"}) {
    const PHQAlgebra p = build(label);
    const Reduction r = full_reduction(p);
    std::size_t total = r.residue.dim();
    for (const auto& s : r.steps) {
      total += s.kind == StepKind::split_plane ? 2 : 4;
      EXPECT_LT(s.recovered.dim(), s.input.dim());
      if (s.kind == StepKind::plane_reduction) expect_round_trip(s);
    }
    EXPECT_EQ(total, p.dim()) << label;
    EXPECT_TRUE(is_abelian(r.residue.algebra()));
  }
}

TEST(FullReduction, RejectsNonNilpotent) {
  const PHQAlgebra base(LieAlgebra::abelian(2), Matrix{{0, -1}, {1, 0}}, Matrix::identity(2));
  const PHQAlgebra g = phq_double_extension(ExtensionData(base, Matrix(2, 2), Matrix{{0, -1}, {1, 0}}, {0, 0}));
  EXPECT_EQ(kind_of([&] { full_reduction(g); }), ErrorKind::NotNilpotent);
}

TEST(Peel, SplitsDefinitePlanesOnly) {
  const Peeled p = peel_definite_planes(build("L(2,4)+R(2,0)"));
  EXPECT_EQ(p.steps.size(), 1u);
  EXPECT_EQ(p.removed, (Signature{2, 0}));
  EXPECT_EQ(fingerprint(p.core), fingerprint(build("L(2,4)")));
  EXPECT_TRUE(peel_definite_planes(build("TstarTheta3K")).steps.empty());
}

TEST(SkewPair, ReadsBackParameters) {
  const PHQAlgebra base = adapted_neutral_base();
  const SkewPairAnalysis a = analyze_skew_pair(base, skew_pair_map(1), Matrix(4, 4));
  EXPECT_EQ(a.a, 1);
  EXPECT_EQ(a.b, 0);
  EXPECT_EQ(a.kernel, Subspace::span(4, {unit_vector(4, 0), unit_vector(4, 1)}));
  EXPECT_TRUE(a.checks.passed()) << a.checks.to_text();

  const SkewPairAnalysis b = analyze_skew_pair(base, skew_pair_map(1), skew_pair_map(1));
  EXPECT_EQ(b.a, 1);
  EXPECT_EQ(b.b, 1);
  EXPECT_TRUE(b.checks.passed());

  const SkewPairAnalysis c = analyze_skew_pair(base, skew_pair_map(3), skew_pair_map(-2));
  EXPECT_EQ(c.a, 3);
  EXPECT_EQ(c.b, -2);
}

TEST(SkewPair, HypothesisViolations) {
  const PHQAlgebra base = adapted_neutral_base();
  EXPECT_EQ(kind_of([&] { analyze_skew_pair(base, Matrix(4, 4), Matrix(4, 4)); }), ErrorKind::HypothesisViolated);
  EXPECT_EQ(kind_of([&] { analyze_skew_pair(build("R(4,0)"), skew_pair_map(1), Matrix(4, 4)); }),
            ErrorKind::HypothesisViolated);
  Matrix not_skew(4, 4);
  not_skew(0, 2) = 1;
  EXPECT_EQ(kind_of([&] { analyze_skew_pair(base, not_skew, Matrix(4, 4)); }), ErrorKind::HypothesisViolated);
}

TEST(SkewPair, NonAdaptedCoordinates) {
  // Same data after a change of basis that mixes the kernel.
  const PHQAlgebra base = adapted_neutral_base();
  const Matrix p{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 1}};
  const Matrix pinv = *inverse(p);
  const PHQAlgebra moved(base.algebra(), pinv * base.J() * p, p.transpose() * base.phi() * p);
  const SkewPairAnalysis a = analyze_skew_pair(moved, pinv * skew_pair_map(1) * p, Matrix(4, 4));
  EXPECT_NE(a.a, 0);
  EXPECT_EQ(a.b, 0);
  EXPECT_EQ(a.kernel.dim(), 2u);
  EXPECT_TRUE(a.checks.passed()) << a.checks.to_text();
}
