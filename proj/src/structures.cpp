#include "phq/structures.hpp"

#include <set>

#include "phq/error.hpp"

namespace phq {

namespace {

std::string pair_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void require_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, what);
}

}  // namespace

PHQAlgebra::PHQAlgebra(LieAlgebra algebra, Matrix j, Matrix phi)
    : algebra_(std::move(algebra)), j_(std::move(j)), phi_(std::move(phi)) {
  require_square(j_, algebra_.dim(), "complex structure shape does not match the algebra");
  require_square(phi_, algebra_.dim(), "metric shape does not match the algebra");
}

Vector nijenhuis(const LieAlgebra& lie, const Matrix& j, const Vector& x, const Vector& y) {
  require_square(j, lie.dim(), "nijenhuis: J shape");
  const Vector jx = j * x, jy = j * y;
  Vector out = bracket(lie, x, y);
  out = add(out, j * bracket(lie, jx, y));
  out = add(out, j * bracket(lie, x, jy));
  return subtract(out, bracket(lie, jx, jy));
}

Report check_complex(const LieAlgebra& lie, const Matrix& j) {
  const std::size_t n = lie.dim();
  if (n % 2 != 0) throw Error(ErrorKind::OddDimension, "a complex structure needs even dimension, got " + std::to_string(n));
  require_square(j, n, "check_complex: J shape");

  Report report;
  Check square{"J^2=-I", true, {}};
  const Matrix j2 = j * j;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational expected = r == c ? -1 : 0;
      if (j2(r, c) != expected) square.fail("entry " + pair_label(r, c) + " of J^2 is " + to_string(j2(r, c)));
    }

  Check integrable{"nijenhuis", true, {}};
  Check identities{"nijenhuis-identities", true, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector x = unit_vector(n, a), y = unit_vector(n, b);
      const Vector value = nijenhuis(lie, j, x, y);
      if (!is_zero(value)) integrable.fail("N_J" + pair_label(a, b) + " = " + to_string(value));
      if (!square.passed) continue;
      const Vector jx = j * x, jy = j * y;
      if (nijenhuis(lie, j, jx, jy) != scaled(-1, value))
        identities.fail("N_J(Jx,Jy) != -N_J(x,y) at " + pair_label(a, b));
      if (nijenhuis(lie, j, jx, y) != scaled(-1, j * value))
        identities.fail("N_J(Jx,y) != -J N_J(x,y) at " + pair_label(a, b));
    }
  report.add(std::move(square));
  report.add(std::move(integrable));
  report.add(std::move(identities));
  return report;
}

Report check_quadratic(const LieAlgebra& lie, const Matrix& g) {
  const std::size_t n = lie.dim();
  require_square(g, n, "check_quadratic: metric shape");
  Report report;

  Check symmetric{"symmetric", true, {}};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c)
      if (g(r, c) != g(c, r)) symmetric.fail("entries " + pair_label(r, c) + " and " + pair_label(c, r) + " differ");

  Check nondegenerate{"nondegenerate", true, {}};
  if (determinant(g) == 0) nondegenerate.fail("det(G) = 0");

  Check invariant{"ad-invariant", true, {}};
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix ad = adjoint(lie, unit_vector(n, i));
    const Matrix defect = g * ad + ad.transpose() * g;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (defect(a, b) != 0)
          invariant.fail("phi([e" + std::to_string(i + 1) + ",e" + std::to_string(a + 1) + "],e" +
                         std::to_string(b + 1) + ") + phi(e" + std::to_string(a + 1) + ",[e" +
                         std::to_string(i + 1) + ",e" + std::to_string(b + 1) + "]) = " +
                         to_string(defect(a, b)));
  }
  report.add(std::move(symmetric));
  report.add(std::move(nondegenerate));
  report.add(std::move(invariant));
  return report;
}

Report check_phq(const PHQAlgebra& p) {
  Report report;
  report.add(check_jacobi(p.algebra()).as_check());
  if (p.dim() % 2 != 0) {
    for (const char* name : {"J^2=-I", "nijenhuis"}) report.add(Check{name, false, {"odd dimension"}});
  } else {
    report.merge(check_complex(p.algebra(), p.J()));
  }
  report.merge(check_quadratic(p.algebra(), p.phi()));

  Check compatible{"J-compatible", true, {}};
  const Matrix defect = p.J().transpose() * p.phi() * p.J() - p.phi();
  for (std::size_t a = 0; a < p.dim(); ++a)
    for (std::size_t b = a; b < p.dim(); ++b)
      if (defect(a, b) != 0)
        compatible.fail("phi(Je" + std::to_string(a + 1) + ",Je" + std::to_string(b + 1) + ") - phi(e" +
                        std::to_string(a + 1) + ",e" + std::to_string(b + 1) + ") = " + to_string(defect(a, b)));
  report.add(std::move(compatible));
  return report;
}

Matrix kahler_form(const PHQAlgebra& p) { return p.phi() * p.J(); }

LieAlgebra j_twisted_bracket(const LieAlgebra& lie, const Matrix& j) {
  const std::size_t n = lie.dim();
  require_square(j, n, "j_twisted_bracket: J shape");
  StructureConstants c(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector x = unit_vector(n, a), y = unit_vector(n, b);
      c.set_bracket(a, b, add(bracket(lie, j * x, y), bracket(lie, x, j * y)));
    }
  return LieAlgebra(lie.basis_names(), std::move(c));
}

JClass j_class(const LieAlgebra& lie, const Matrix& j) {
  const std::size_t n = lie.dim();
  require_square(j, n, "j_class: J shape");
  JClass result{true, true};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector x = unit_vector(n, a), y = unit_vector(n, b);
      const Vector xy = lie.basis_bracket(a, b);
      if (a < b && bracket(lie, j * x, j * y) != xy) result.abelian = false;
      if (bracket(lie, j * x, y) != j * xy) result.bi_invariant = false;
    }
  return result;
}

std::string_view to_string(FingerprintField field) {
  switch (field) {
    case FingerprintField::dim: return "dim";
    case FingerprintField::dim_derived: return "dim_derived";
    case FingerprintField::dim_center: return "dim_center";
    case FingerprintField::nilpotency_index: return "nilpotency_index";
    case FingerprintField::sig_phi: return "sig_phi";
    case FingerprintField::sig_phi_on_derived: return "sig_phi_on_derived";
  }
  return "unknown";
}

std::string Fingerprint::table_row() const {
  return std::to_string(dim) + " | " + std::to_string(dim_derived) + " | " + to_string(sig_phi) + " | " +
         to_string(sig_phi_on_derived) + " | " +
         (nilpotency_index ? std::to_string(*nilpotency_index) : std::string("not nilpotent"));
}

std::optional<FingerprintField> first_difference(const Fingerprint& a, const Fingerprint& b) {
  if (a.dim != b.dim) return FingerprintField::dim;
  if (a.sig_phi != b.sig_phi) return FingerprintField::sig_phi;
  if (a.dim_center != b.dim_center) return FingerprintField::dim_center;
  if (a.sig_phi_on_derived != b.sig_phi_on_derived) return FingerprintField::sig_phi_on_derived;
  if (a.dim_derived != b.dim_derived) return FingerprintField::dim_derived;
  if (a.nilpotency_index != b.nilpotency_index) return FingerprintField::nilpotency_index;
  return std::nullopt;
}

Fingerprint fingerprint(const PHQAlgebra& p) {
  const Subspace d = derived(p.algebra());
  Fingerprint f;
  f.dim = p.dim();
  f.dim_derived = d.dim();
  f.dim_center = center(p.algebra()).dim();
  f.nilpotency_index = nilpotency_index(p.algebra());
  f.sig_phi = signature(p.phi());
  f.sig_phi_on_derived = signature(d.basis() * p.phi() * d.basis().transpose());
  return f;
}

Report salamon_check(const PHQAlgebra& p) {
  const Subspace d = derived(p.algebra());
  const Subspace total = sum(d, image(p.J(), d));
  Check check{"salamon", true, {}};
  if (!(total.dim() < p.dim()))
    check.fail("dim([g,g] + J[g,g]) = " + std::to_string(total.dim()) + " is not below dim g = " +
               std::to_string(p.dim()));
  Report report;
  report.add(std::move(check));
  return report;
}

PHQAlgebra restrict_to(const PHQAlgebra& p, const Matrix& basis, std::vector<std::string> names) {
  const std::size_t m = basis.cols();
  if (basis.rows() != p.dim() || names.size() != m)
    throw Error(ErrorKind::DimensionMismatch, "restrict_to: basis shape");
  auto coords = [&](const Vector& w, const char* what) {
    auto c = coordinates(basis, w);
    if (!c) throw Error(ErrorKind::InvalidParameter, std::string("restrict_to: subspace not closed under ") + what);
    return *c;
  };
  StructureConstants c(m);
  Matrix j(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    j.set_column(a, coords(p.J() * basis.column(a), "J"));
    for (std::size_t b = a + 1; b < m; ++b)
      c.set_bracket(a, b, coords(bracket(p.algebra(), basis.column(a), basis.column(b)), "the bracket"));
  }
  Matrix g = basis.transpose() * p.phi() * basis;
  return PHQAlgebra(LieAlgebra(std::move(names), std::move(c)), std::move(j), std::move(g));
}

PHQAlgebra change_basis(const PHQAlgebra& p, const Matrix& basis, std::vector<std::string> names) {
  if (!inverse(basis)) throw Error(ErrorKind::InvalidParameter, "change_basis: singular basis");
  return restrict_to(p, basis, std::move(names));
}

std::vector<std::string> subspace_names(const std::vector<std::string>& ambient, const Matrix& basis,
                                        const std::string& prefix) {
  std::vector<std::string> names;
  std::set<std::string> used;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    std::string name = prefix + std::to_string(c + 1);
    std::size_t nonzero = 0, where = 0;
    for (std::size_t r = 0; r < basis.rows(); ++r)
      if (basis(r, c) != 0) {
        ++nonzero;
        where = r;
      }
    if (nonzero == 1 && basis(where, c) == 1) name = ambient.at(where);
    while (used.count(name)) name += "'";
    used.insert(name);
    names.push_back(name);
  }
  return names;
}

}  // namespace phq
