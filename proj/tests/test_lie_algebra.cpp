#include <gtest/gtest.h>

#include "phq/catalog.hpp"
#include "phq/error.hpp"
#include "phq/lie_algebra.hpp"

using namespace phq;

namespace {

LieAlgebra heisenberg() {
  StructureConstants c(3);
  c.add(0, 1, 2, 1);
  return LieAlgebra({"x", "y", "z"}, c);
}

}  // namespace

TEST(LieAlgebra, RejectsNonAntisymmetricConstants) {
  StructureConstants c(2);
  c.raw(0, 1, 0) = 1;
  EXPECT_THROW(LieAlgebra(default_basis_names(2), c), Error);
  EXPECT_THROW(c.set_bracket(1, 1, {1, 0}), Error);
}

TEST(LieAlgebra, BracketAndAdjoint) {
  const LieAlgebra h = heisenberg();
  EXPECT_EQ(bracket(h, {1, 0, 0}, {0, 1, 0}), (Vector{0, 0, 1}));
  EXPECT_EQ(bracket(h, {0, 1, 0}, {1, 0, 0}), (Vector{0, 0, -1}));
  EXPECT_EQ(adjoint(h, {1, 0, 0}), (Matrix{{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}));
}

TEST(LieAlgebra, CenterDerivedNilpotency) {
  const LieAlgebra h = heisenberg();
  EXPECT_EQ(center(h), Subspace::span(3, {{0, 0, 1}}));
  EXPECT_EQ(derived(h), Subspace::span(3, {{0, 0, 1}}));
  EXPECT_EQ(nilpotency_index(h), 2u);
  EXPECT_EQ(nilpotency_index(LieAlgebra::abelian(4)), 1u);
  EXPECT_EQ(nilpotency_index(LieAlgebra::abelian(0)), 0u);
  EXPECT_TRUE(is_abelian(LieAlgebra::abelian(3)));
  EXPECT_FALSE(is_abelian(h));
}

TEST(LieAlgebra, NonNilpotentAlgebraHasNoIndex) {
  // aff(1): [a, b] = b
  StructureConstants c(2);
  c.add(0, 1, 1, 1);
  const LieAlgebra aff({"a", "b"}, c);
  EXPECT_FALSE(nilpotency_index(aff).has_value());
  EXPECT_TRUE(check_jacobi(aff).passed());
}

TEST(LieAlgebra, JacobiViolationIsReported) {
  StructureConstants c(3);
  c.add(0, 1, 2, 1);
  c.add(1, 2, 0, 1);
  c.add(2, 0, 2, 1);
  const JacobiReport r = check_jacobi(LieAlgebra(default_basis_names(3), c));
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.violations[0].i, 0u);
  EXPECT_EQ(r.violations[0].k, 2u);
  EXPECT_FALSE(r.as_check().passed);
  EXPECT_EQ(r.as_check().name, "jacobi");
}

TEST(LieAlgebra, LorentzAlgebraIsThreeStep) {
  const LieAlgebra l = build("L(4,2)").algebra();
  EXPECT_EQ(nilpotency_index(l), 3u);
  EXPECT_EQ(derived(l).dim(), 3u);
  EXPECT_EQ(center(l).dim(), 3u);
}

TEST(LieAlgebra, DerivationsAndInnerMaps) {
  const LieAlgebra h = heisenberg();
  const Matrix ad_x = adjoint(h, {1, 0, 0});
  EXPECT_TRUE(is_derivation(h, ad_x).passed());
  EXPECT_EQ(*solve_inner(h, ad_x), (Vector{1, 0, 0}));
  // z -> x is not a derivation: [x,y] = z maps to x, but [Mx,y]+[x,My] = 0.
  Matrix m(3, 3);
  m(0, 2) = 1;
  EXPECT_FALSE(is_derivation(h, m).passed());
  EXPECT_FALSE(solve_inner(h, m).has_value());
}

TEST(LieAlgebra, ChangeOfBasisKeepsTheAlgebra) {
  const LieAlgebra h = heisenberg();
  const Matrix p{{1, 1, 0}, {0, 1, 0}, {0, 0, 2}};
  const LieAlgebra k = change_basis(h, p, {"a", "b", "c"});
  // [a, b] = [x, x+y] = z = c/2
  EXPECT_EQ(k.basis_bracket(0, 1), (Vector{0, 0, Rational(1, 2)}));
  EXPECT_TRUE(check_jacobi(k).passed());
}
