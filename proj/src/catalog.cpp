#include "phq/catalog.hpp"

#include <algorithm>
#include <regex>

#include "phq/constructions.hpp"
#include "phq/error.hpp"

namespace phq {

ComplexLieAlgebra kodaira() {
  StructureConstants c(4);
  c.add(0, 1, 2, 1);
  Matrix j(4, 4);
  j(1, 0) = 1;
  j(0, 1) = -1;
  j(3, 2) = 1;
  j(2, 3) = -1;
  return {LieAlgebra({"x1", "x2", "x3", "x4"}, std::move(c)), std::move(j)};
}

PHQAlgebra lorentz_algebra(bool opposite) {
  enum { x1, jx1, x2, jx2, x3, jx3 };
  StructureConstants c(6);
  c.add(x1, jx1, x2, 1);
  c.add(x1, x2, jx3, -1);
  c.add(jx1, x2, x3, 1);
  Matrix j(6, 6), g(6, 6);
  for (std::size_t i = 0; i < 6; i += 2) {
    j(i + 1, i) = 1;
    j(i, i + 1) = -1;
  }
  const Rational s = opposite ? -1 : 1;
  g(x1, x3) = g(x3, x1) = s;
  g(jx1, jx3) = g(jx3, jx1) = s;
  g(x2, x2) = g(jx2, jx2) = s;
  return PHQAlgebra(LieAlgebra({"x1", "Jx1", "x2", "Jx2", "x3", "Jx3"}, std::move(c)), std::move(j), std::move(g));
}

PHQAlgebra abelian_phq(std::size_t p, std::size_t q) {
  if (p % 2 != 0 || q % 2 != 0) throw Error(ErrorKind::InvalidParameter, "abelian signature must be even");
  const std::size_t n = p + q;
  Matrix j(n, n);
  Vector diag(n);
  for (std::size_t i = 0; i < n; i += 2) {
    j(i + 1, i) = 1;
    j(i, i + 1) = -1;
  }
  for (std::size_t i = 0; i < n; ++i) diag[i] = i < p ? 1 : -1;
  return PHQAlgebra(LieAlgebra::abelian(n), std::move(j), Matrix::diagonal(diag));
}

PHQAlgebra tstar_kodaira(const Vector& alphas) {
  const ComplexLieAlgebra k = kodaira();
  return tstar_extension(k.algebra, k.J, combine(kodaira_cocycle_basis(), alphas));
}

std::string_view to_string(Indecomposable factor) {
  switch (factor) {
    case Indecomposable::L42: return "L(4,2)";
    case Indecomposable::L24: return "L(2,4)";
    case Indecomposable::Tstar0K: return "Tstar0K";
    case Indecomposable::TstarTheta3K: return "TstarTheta3K";
  }
  return "?";
}

namespace {

constexpr Indecomposable kAllFactors[] = {Indecomposable::L42, Indecomposable::L24, Indecomposable::Tstar0K,
                                          Indecomposable::TstarTheta3K};

PHQAlgebra build_factor(Indecomposable factor) {
  switch (factor) {
    case Indecomposable::L42: return lorentz_algebra(false);
    case Indecomposable::L24: return lorentz_algebra(true);
    case Indecomposable::Tstar0K: return tstar_kodaira({0, 0, 0, 0});
    case Indecomposable::TstarTheta3K: return tstar_kodaira({0, 0, 1, 0});
  }
  throw Error(ErrorKind::UnknownLabel, "unknown factor");
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

CatalogLabel parse_label(std::string_view text) {
  static const std::regex abelian_term(R"(R\((\d+),(\d+)\))");
  CatalogLabel label;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = text.find('+', start);
    const std::string term = trim(text.substr(start, plus == std::string_view::npos ? text.npos : plus - start));
    std::smatch m;
    bool known = false;
    for (auto factor : kAllFactors)
      if (term == to_string(factor)) {
        label.factors.push_back(factor);
        known = true;
      }
    if (!known) {
      if (!std::regex_match(term, m, abelian_term))
        throw Error(ErrorKind::UnknownLabel, "unknown label term '" + term + "'");
      const std::size_t p = std::stoul(m[1]), q = std::stoul(m[2]);
      if (p % 2 != 0 || q % 2 != 0) throw Error(ErrorKind::UnknownLabel, "abelian term needs even signature: " + term);
      label.abelian = label.abelian + Signature{p, q};
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  std::sort(label.factors.begin(), label.factors.end());
  return label;
}

std::string to_string(const CatalogLabel& label) {
  std::string out;
  for (auto factor : label.factors) {
    if (!out.empty()) out += "+";
    out += to_string(factor);
  }
  if (label.abelian != Signature{} || out.empty()) {
    if (!out.empty()) out += "+";
    out += "R" + to_string(label.abelian);
  }
  return out;
}

PHQAlgebra build(const CatalogLabel& label) {
  PHQAlgebra out = abelian_phq(0, 0);
  bool first = true;
  for (auto factor : label.factors) {
    PHQAlgebra next = build_factor(factor);
    out = first ? std::move(next) : direct_sum(out, next);
    first = false;
  }
  if (label.abelian != Signature{}) {
    PHQAlgebra r = abelian_phq(label.abelian.positive, label.abelian.negative);
    out = first ? std::move(r) : direct_sum(out, r);
  }
  return out;
}

PHQAlgebra build(std::string_view label) { return build(parse_label(label)); }

Classification classify(const PHQAlgebra& p) {
  if (p.dim() > 8) throw Error(ErrorKind::DimensionTooLarge, "classification covers dimension <= 8, got " + std::to_string(p.dim()));
  const Report axioms = check_phq(p);
  if (!axioms.passed()) throw Error(ErrorKind::InvalidStructure, "input fails " + axioms.failed_names());
  if (!nilpotency_index(p.algebra())) throw Error(ErrorKind::NotNilpotent, "classification needs a nilpotent algebra");

  Classification out;
  out.fingerprint = fingerprint(p);
  out.peeled = peel_definite_planes(p);
  out.core_fingerprint = fingerprint(out.peeled.core);
  out.label.abelian = out.peeled.removed;
  if (out.peeled.core.dim() != 0) {
    bool matched = false;
    for (auto factor : kAllFactors)
      if (fingerprint(build_factor(factor)) == out.core_fingerprint) {
        out.label.factors.push_back(factor);
        matched = true;
        break;
      }
    if (!matched)
      throw Error(ErrorKind::UnclassifiedFingerprint, "core fingerprint " + out.core_fingerprint.table_row());
  }
  out.reduction = full_reduction(p);
  return out;
}

Report verify_witness(const PHQAlgebra& a, const PHQAlgebra& b, const Matrix& w) {
  const std::size_t n = a.dim();
  if (b.dim() != n || w.rows() != n || w.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "verify_witness: dimensions differ");
  Report report;
  Check invertible{"invertible", true, {}};
  if (determinant(w) == 0) invertible.fail("det(W) = 0");
  Check j{"J", true, {}};
  if (w * a.J() != b.J() * w) j.fail("W J_A != J_B W");
  Check metric{"metric", true, {}};
  if (w.transpose() * b.phi() * w != a.phi()) metric.fail("W^T G_B W != G_A");
  Check brackets{"bracket", true, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      const Vector lhs = w * a.algebra().basis_bracket(i, k);
      const Vector rhs = bracket(b.algebra(), w.column(i), w.column(k));
      if (lhs != rhs)
        brackets.fail("pair (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + "): " + to_string(lhs) +
                      " vs " + to_string(rhs));
    }
  report.add(std::move(invertible));
  report.add(std::move(j));
  report.add(std::move(metric));
  report.add(std::move(brackets));
  return report;
}

Inequivalence inequivalence_evidence(const PHQAlgebra& a, const PHQAlgebra& b) {
  const Fingerprint fa = fingerprint(a), fb = fingerprint(b);
  Inequivalence out;
  out.field = first_difference(fa, fb);
  Check check{"separated", true, {}};
  if (out.field) {
    check.details.push_back("differ at " + std::string(to_string(*out.field)) + ": " + fa.table_row() + " vs " +
                            fb.table_row());
  } else {
    check.fail("NoInvariantSeparation: fingerprints coincide, which does not prove equivalence");
  }
  out.report.add(std::move(check));
  return out;
}

}  // namespace phq
