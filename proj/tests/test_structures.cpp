#include <gtest/gtest.h>

#include "oracle.hpp"
#include "phq/catalog.hpp"
#include "phq/error.hpp"
#include "phq/structures.hpp"

using namespace phq;

TEST(Complex, KodairaStructureIsIntegrable) {
  const ComplexLieAlgebra k = kodaira();
  const Report r = check_complex(k.algebra, k.J);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_TRUE(r.at("nijenhuis-identities").passed);
  // Column convention: J sends e1 to e2.
  EXPECT_EQ(k.J * unit_vector(4, 0), unit_vector(4, 1));
}

TEST(Complex, OddDimensionThrows) {
  try {
    check_complex(LieAlgebra::abelian(3), Matrix::identity(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OddDimension);
  }
}

TEST(Complex, NonIntegrableStructureFailsNijenhuis) {
  // Heisenberg plus a line with J x = z, J y = w: N(x,y) = [x,y] = z.
  StructureConstants c(4);
  c.add(0, 1, 2, 1);
  Matrix j(4, 4);
  j(2, 0) = 1;
  j(0, 2) = -1;
  j(3, 1) = 1;
  j(1, 3) = -1;
  const Report r = check_complex(LieAlgebra(default_basis_names(4), c), j);
  EXPECT_TRUE(r.at("J^2=-I").passed);
  EXPECT_FALSE(r.at("nijenhuis").passed);
  EXPECT_TRUE(r.at("nijenhuis-identities").passed);
}

TEST(Complex, NotASquareRootOfMinusOne) {
  const Report r = check_complex(LieAlgebra::abelian(2), Matrix::identity(2));
  EXPECT_FALSE(r.at("J^2=-I").passed);
}

TEST(Quadratic, DetectsEachFailure) {
  const PHQAlgebra l = build("L(4,2)");
  EXPECT_TRUE(check_quadratic(l.algebra(), l.phi()).passed());
  Matrix asym = l.phi();
  asym(0, 1) = 1;
  EXPECT_FALSE(check_quadratic(l.algebra(), asym).at("symmetric").passed);
  EXPECT_FALSE(check_quadratic(l.algebra(), Matrix(6, 6)).at("nondegenerate").passed);
  EXPECT_FALSE(check_quadratic(l.algebra(), Matrix::identity(6)).at("ad-invariant").passed);
}

TEST(PHQ, CatalogPassesAndOddDimensionFailsGracefully) {
  for (const char* label : {"L(4,2)", "L(2,4)", "Tstar0K", "TstarTheta3K", "R(2,2)"}) {
    const Report r = check_phq(build(label));
    EXPECT_TRUE(r.passed()) << label << "\n" << r.to_text();
  }
  const PHQAlgebra odd(LieAlgebra::abelian(1), Matrix{{0}}, Matrix{{1}});
  const Report r = check_phq(odd);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.at("J^2=-I").passed);
  EXPECT_TRUE(r.at("ad-invariant").passed);
}

TEST(PHQ, IncompatibleMetricFails) {
  const PHQAlgebra a(LieAlgebra::abelian(2), Matrix{{0, -1}, {1, 0}}, Matrix::diagonal({1, 2}));
  EXPECT_FALSE(check_phq(a).at("J-compatible").passed);
}

TEST(PHQ, ShapesAreEnforced) {
  EXPECT_THROW(PHQAlgebra(LieAlgebra::abelian(2), Matrix::identity(3), Matrix::identity(2)), Error);
}

TEST(Kahler, FormIsSkew) {
  const PHQAlgebra l = build("L(4,2)");
  const Matrix omega = kahler_form(l);
  EXPECT_EQ(omega.transpose(), -omega);
}

TEST(JClass, KodairaIsAbelianAndCatalogIsGeneric) {
  const ComplexLieAlgebra k = kodaira();
  EXPECT_TRUE(j_class(k.algebra, k.J).abelian);
  EXPECT_FALSE(j_class(k.algebra, k.J).bi_invariant);
  for (const char* label : {"L(4,2)", "Tstar0K", "TstarTheta3K"}) {
    const PHQAlgebra p = build(label);
    EXPECT_TRUE(j_class(p.algebra(), p.J()).generic()) << label;
  }
  const PHQAlgebra r = build("R(2,0)");
  EXPECT_TRUE(j_class(r.algebra(), r.J()).abelian);
  EXPECT_TRUE(j_class(r.algebra(), r.J()).bi_invariant);
}

TEST(JClass, TwistedBracketOfAbelianStructureVanishesOnKodaira) {
  // For an abelian J the twisted bracket [Jx,y]+[x,Jy] is a Lie bracket.
  const ComplexLieAlgebra k = kodaira();
  EXPECT_TRUE(check_jacobi(j_twisted_bracket(k.algebra, k.J)).passed());
}

TEST(Fingerprint, TableRows) {
  EXPECT_EQ(fingerprint(build("L(4,2)")).table_row(), "6 | 3 | (4,2) | (1,0) | 3");
  EXPECT_EQ(fingerprint(build("L(2,4)")).table_row(), "6 | 3 | (2,4) | (0,1) | 3");
  const Fingerprint t0 = fingerprint(build("Tstar0K"));
  EXPECT_EQ(t0.table_row(), "8 | 3 | (4,4) | (0,0) | 2");
  EXPECT_EQ(t0.dim_center, 5u);
  const Fingerprint t3 = fingerprint(build("TstarTheta3K"));
  EXPECT_EQ(t3.table_row(), "8 | 5 | (4,4) | (1,1) | 3");
  EXPECT_EQ(t3.dim_center, 3u);
}

TEST(Fingerprint, FirstDifference) {
  const Fingerprint a = fingerprint(build("Tstar0K")), b = fingerprint(build("TstarTheta3K"));
  EXPECT_EQ(first_difference(a, b), FingerprintField::dim_center);
  EXPECT_FALSE(first_difference(a, a).has_value());
  EXPECT_EQ(to_string(FingerprintField::sig_phi_on_derived), "sig_phi_on_derived");
}

TEST(Salamon, HoldsOnNilpotentCatalog) {
  for (const char* label : {"L(4,2)", "Tstar0K", "TstarTheta3K", "L(2,4)+R(2,0)"})
    EXPECT_TRUE(salamon_check(build(label)).passed()) << label;
}

TEST(Restriction, ToAnIdealAndRejection) {
  const PHQAlgebra p = build("L(4,2)+R(2,0)");
  Matrix basis(8, 6);
  for (std::size_t i = 0; i < 6; ++i) basis(i, i) = 1;
  const PHQAlgebra l = restrict_to(p, basis, subspace_names(p.algebra().basis_names(), basis, "u"));
  EXPECT_EQ(l, build("L(4,2)"));
  Matrix not_closed(8, 2);
  not_closed(0, 0) = 1;
  not_closed(2, 1) = 1;
  EXPECT_THROW(restrict_to(p, not_closed, {"a", "b"}), Error);
}

TEST(Restriction, SubspaceNames) {
  const Matrix basis = Matrix::from_columns({{1, 0, 0}, {0, 1, 1}}, 3);
  EXPECT_EQ(subspace_names({"a", "b", "c"}, basis, "u"), (std::vector<std::string>{"a", "u2"}));
}

// Property: the axiom checks agree with the naive oracle, and fingerprints
// are invariant under random changes of basis.
TEST(StructuresProperty, BasisChangeKeepsVerdictsAndFingerprint) {
  std::mt19937 rng(5);
  for (const char* label : {"L(4,2)", "L(2,4)+R(0,2)", "TstarTheta3K", "Tstar0K"}) {
    const PHQAlgebra p = build(label);
    for (int trial = 0; trial < 3; ++trial) {
      const Matrix w = oracle::random_invertible(rng, p.dim());
      const PHQAlgebra q = change_basis(p, w, default_basis_names(p.dim()));
      EXPECT_TRUE(check_phq(q).passed()) << label;
      EXPECT_TRUE(oracle::all_pass(oracle::check(q))) << label;
      EXPECT_EQ(fingerprint(q), fingerprint(p)) << label;
    }
  }
}
