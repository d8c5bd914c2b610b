#include <gtest/gtest.h>

#include "oracle.hpp"
#include "phq/catalog.hpp"
#include "phq/error.hpp"

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

const char* const kLabels[] = {"R(0,0)",        "R(2,0)",        "R(0,2)",        "R(4,0)",
                               "R(2,2)",        "R(0,4)",        "R(6,0)",        "R(4,2)",
                               "R(2,4)",        "R(0,6)",        "R(8,0)",        "R(6,2)",
                               "R(4,4)",        "R(2,6)",        "R(0,8)",        "L(4,2)",
                               "L(2,4)",        "L(4,2)+R(2,0)", "L(4,2)+R(0,2)", "L(2,4)+R(2,0)",
                               "L(2,4)+R(0,2)", "Tstar0K",       "TstarTheta3K"};

}  // namespace

TEST(Catalog, EveryEntryIsPHQ) {
  for (const char* label : kLabels) {
    const PHQAlgebra p = build(label);
    EXPECT_TRUE(check_phq(p).passed()) << label << "\n" << check_phq(p).to_text();
    EXPECT_TRUE(oracle::all_pass(oracle::check(p))) << label;
    EXPECT_TRUE(nilpotency_index(p.algebra()).has_value()) << label;
  }
}

TEST(Catalog, KodairaIsComplexButNotQuadratic) {
  const ComplexLieAlgebra k = kodaira();
  EXPECT_TRUE(check_jacobi(k.algebra).passed());
  EXPECT_TRUE(check_complex(k.algebra, k.J).passed());
  EXPECT_EQ(nilpotency_index(k.algebra), 2u);
  EXPECT_EQ(center(k.algebra), Subspace::span(4, {unit_vector(4, 2), unit_vector(4, 3)}));
}

TEST(Catalog, LorentzBrackets) {
  const PHQAlgebra l = build("L(4,2)");
  EXPECT_EQ(l.algebra().basis_bracket(0, 1), unit_vector(6, 2));
  EXPECT_EQ(l.algebra().basis_bracket(0, 2), scaled(-1, unit_vector(6, 5)));
  EXPECT_EQ(l.algebra().basis_bracket(1, 2), unit_vector(6, 4));
  EXPECT_EQ(signature(l.phi()), (Signature{4, 2}));
  EXPECT_EQ(build("L(2,4)").phi(), -l.phi());
  EXPECT_EQ(center(l.algebra()).dim(), 3u);
}

TEST(Catalog, AbelianRejectsOddSignature) {
  EXPECT_EQ(kind_of([] { abelian_phq(1, 1); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(abelian_phq(0, 0).dim(), 0u);
}

TEST(Labels, CanonicalOrderAndMerging) {
  EXPECT_EQ(to_string(parse_label("R(2,0)+L(2,4)")), "L(2,4)+R(2,0)");
  EXPECT_EQ(to_string(parse_label("R(2,0) + R(0,2)")), "R(2,2)");
  EXPECT_EQ(to_string(parse_label("TstarTheta3K+L(4,2)")), "L(4,2)+TstarTheta3K");
  EXPECT_EQ(to_string(parse_label("R(0,0)")), "R(0,0)");
  EXPECT_EQ(to_string(CatalogLabel{}), "R(0,0)");
  for (const char* label : kLabels) EXPECT_EQ(to_string(parse_label(label)), label);
}

TEST(Labels, Rejections) {
  EXPECT_EQ(kind_of([] { parse_label("L(3,3)"); }), ErrorKind::UnknownLabel);
  EXPECT_EQ(kind_of([] { parse_label("R(1,1)"); }), ErrorKind::UnknownLabel);
  EXPECT_EQ(kind_of([] { parse_label(""); }), ErrorKind::UnknownLabel);
  EXPECT_EQ(kind_of([] { parse_label("L(4,2)+"); }), ErrorKind::UnknownLabel);
}

TEST(Classify, EveryCatalogEntryMapsToItself) {
  for (const char* label : kLabels) {
    const Classification c = classify(build(label));
    EXPECT_EQ(to_string(c.label), label);
    EXPECT_TRUE(is_abelian(c.reduction.residue.algebra()));
  }
}

TEST(Classify, TstarTheta1IsALorentzSum) {
  // Computed under the (positive, negative) convention.
  EXPECT_EQ(to_string(classify(tstar_kodaira({1, 0, 0, 0})).label), "L(4,2)+R(0,2)");
  EXPECT_EQ(to_string(classify(tstar_kodaira({-1, 0, 0, 0})).label), "L(2,4)+R(2,0)");
  EXPECT_EQ(fingerprint(tstar_kodaira({1, 0, 0, 0})), fingerprint(build("L(4,2)+R(0,2)")));
}

TEST(Classify, InvariantUnderBasisChange) {
  std::mt19937 rng(7);
  for (const char* label : {"L(4,2)", "L(2,4)+R(0,2)", "Tstar0K", "TstarTheta3K"}) {
    const PHQAlgebra p = build(label);
    for (int trial = 0; trial < 3; ++trial) {
      const Matrix b = oracle::random_invertible(rng, p.dim());
      const PHQAlgebra q = change_basis(p, b, default_basis_names(p.dim()));
      EXPECT_EQ(to_string(classify(q).label), label);
    }
  }
}

TEST(Classify, Errors) {
  EXPECT_EQ(kind_of([] { classify(direct_sum(build("L(4,2)"), build("R(4,0)"))); }), ErrorKind::DimensionTooLarge);
  PHQAlgebra bad = build("L(4,2)");
  bad = PHQAlgebra(bad.algebra(), bad.J(), -build("R(2,4)").phi());
  EXPECT_EQ(kind_of([&] { classify(bad); }), ErrorKind::InvalidStructure);
  const PHQAlgebra base(LieAlgebra::abelian(2), Matrix{{0, -1}, {1, 0}}, Matrix::identity(2));
  const PHQAlgebra rot =
      phq_double_extension(ExtensionData(base, Matrix(2, 2), Matrix{{0, -1}, {1, 0}}, {0, 0}));
  ASSERT_TRUE(check_phq(rot).passed());
  EXPECT_EQ(kind_of([&] { classify(rot); }), ErrorKind::NotNilpotent);
}

TEST(Witness, IdentityAndRejections) {
  const PHQAlgebra l = build("L(4,2)");
  EXPECT_TRUE(verify_witness(l, l, Matrix::identity(6)).passed());
  const Report r = verify_witness(l, l, Rational(2) * Matrix::identity(6));
  EXPECT_TRUE(r.at("J").passed);
  EXPECT_FALSE(r.at("metric").passed);
  EXPECT_FALSE(r.at("bracket").passed);
  EXPECT_FALSE(verify_witness(l, l, Matrix(6, 6)).at("invertible").passed);
  EXPECT_FALSE(verify_witness(l, build("L(2,4)"), Matrix::identity(6)).passed());
}

TEST(Witness, BasisChangeIsAWitness) {
  std::mt19937 rng(11);
  const PHQAlgebra t = build("TstarTheta3K");
  const Matrix b = oracle::random_invertible(rng, 8);
  const PHQAlgebra moved = change_basis(t, b, default_basis_names(8));
  // Columns of b are the new basis in old coordinates: b maps moved -> t.
  EXPECT_TRUE(verify_witness(moved, t, b).passed());
  EXPECT_FALSE(verify_witness(moved, t, Matrix::identity(8)).passed());
}

TEST(Inequivalence, SeparatesCatalogPairs) {
  for (std::size_t i = 0; i < std::size(kLabels); ++i)
    for (std::size_t k = i + 1; k < std::size(kLabels); ++k) {
      const PHQAlgebra a = build(kLabels[i]), b = build(kLabels[k]);
      if (a.dim() != b.dim()) continue;
      const Inequivalence e = inequivalence_evidence(a, b);
      EXPECT_TRUE(e.field.has_value()) << kLabels[i] << " vs " << kLabels[k];
      EXPECT_TRUE(e.report.passed());
    }
}

TEST(Inequivalence, Examples) {
  EXPECT_EQ(inequivalence_evidence(build("Tstar0K"), build("TstarTheta3K")).field, FingerprintField::dim_center);
  EXPECT_EQ(inequivalence_evidence(build("L(4,2)"), build("L(2,4)")).field, FingerprintField::sig_phi);
  EXPECT_EQ(inequivalence_evidence(tstar_kodaira({1, 0, 0, 0}), tstar_kodaira({-1, 0, 0, 0})).field,
            FingerprintField::sig_phi_on_derived);
  const Inequivalence same = inequivalence_evidence(build("L(4,2)"), build("L(4,2)"));
  EXPECT_FALSE(same.field.has_value());
  EXPECT_FALSE(same.report.passed());
  EXPECT_NE(same.report.at("separated").details.front().find("NoInvariantSeparation"), std::string::npos);
}
