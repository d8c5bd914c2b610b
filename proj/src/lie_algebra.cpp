#include "phq/lie_algebra.hpp"

#include "phq/error.hpp"

namespace phq {

StructureConstants::StructureConstants(std::size_t dim) : dim_(dim), values_(dim * dim * dim, Rational(0)) {}

void StructureConstants::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_)
    throw Error(ErrorKind::IndexOutOfRange, "set_bracket index or length");
  if (i == j) {
    if (!is_zero(value)) throw Error(ErrorKind::InvalidStructure, "[e_i, e_i] must vanish");
    return;
  }
  for (std::size_t k = 0; k < dim_; ++k) {
    raw(i, j, k) = value[k];
    raw(j, i, k) = -value[k];
  }
}

void StructureConstants::add(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(ErrorKind::IndexOutOfRange, "StructureConstants::add");
  if (i == j) {
    if (value != 0) throw Error(ErrorKind::InvalidStructure, "[e_i, e_i] must vanish");
    return;
  }
  raw(i, j, k) += value;
  raw(j, i, k) -= value;
}

std::vector<std::string> default_basis_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, StructureConstants constants)
    : names_(std::move(basis_names)), c_(std::move(constants)) {
  if (c_.dim() != names_.size())
    throw Error(ErrorKind::DimensionMismatch, "basis names vs structure constants");
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c_(i, j, k) != -c_(j, i, k))
          throw Error(ErrorKind::InvalidStructure,
                      "structure constants not antisymmetric at (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ")");
}

LieAlgebra LieAlgebra::abelian(std::vector<std::string> basis_names) {
  const std::size_t n = basis_names.size();
  return LieAlgebra(std::move(basis_names), StructureConstants(n));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return abelian(default_basis_names(dim)); }

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  Vector v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = c_(i, j, k);
  return v;
}

Vector bracket(const LieAlgebra& lie, const Vector& x, const Vector& y) {
  const std::size_t n = lie.dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorKind::DimensionMismatch, "bracket operand length");
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += w * lie.constant(i, j, k);
    }
  }
  return out;
}

Check JacobiReport::as_check() const {
  Check check{"jacobi", true, {}};
  for (const auto& v : violations)
    check.fail("triple (" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," +
               std::to_string(v.k + 1) + ") residual " + to_string(v.residual));
  return check;
}

JacobiReport check_jacobi(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  JacobiReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector sum = bracket(lie, ei, lie.basis_bracket(j, k));
        sum = add(sum, bracket(lie, ej, lie.basis_bracket(k, i)));
        sum = add(sum, bracket(lie, ek, lie.basis_bracket(i, j)));
        if (!is_zero(sum)) report.violations.push_back({i, j, k, sum});
      }
  return report;
}

Matrix adjoint(const LieAlgebra& lie, const Vector& x) {
  const std::size_t n = lie.dim();
  if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "adjoint operand length");
  Matrix ad(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) ad(k, j) += x[i] * lie.constant(i, j, k);
  }
  return ad;
}

Subspace center(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  // x is central iff [e_i, x] = 0 for every i: stack all ad(e_i).
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) stacked(i * n + k, j) = lie.constant(i, j, k);
  return kernel(stacked);
}

Subspace derived(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) brackets.push_back(lie.basis_bracket(i, j));
  return Subspace::span(n, brackets);
}

Subspace bracket_with_algebra(const LieAlgebra& lie, const Subspace& u) {
  const std::size_t n = lie.dim();
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& b : u.vectors()) brackets.push_back(bracket(lie, unit_vector(n, i), b));
  return Subspace::span(n, brackets);
}

bool is_abelian(const LieAlgebra& lie) {
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = i + 1; j < lie.dim(); ++j)
      for (std::size_t k = 0; k < lie.dim(); ++k)
        if (lie.constant(i, j, k) != 0) return false;
  return true;
}

std::optional<std::size_t> nilpotency_index(const LieAlgebra& lie) {
  Subspace term = Subspace::full(lie.dim());
  std::size_t index = 0;
  while (!term.is_zero()) {
    Subspace next = bracket_with_algebra(lie, term);
    if (next == term) return std::nullopt;
    term = std::move(next);
    ++index;
  }
  return index;
}

Report is_derivation(const LieAlgebra& lie, const Matrix& map) {
  const std::size_t n = lie.dim();
  if (map.rows() != n || map.cols() != n) throw Error(ErrorKind::DimensionMismatch, "is_derivation map shape");
  Check check{"derivation", true, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
      const Vector lhs = map * lie.basis_bracket(i, j);
      const Vector rhs = add(bracket(lie, map.column(i), ej), bracket(lie, ei, map.column(j)));
      if (lhs != rhs)
        check.fail("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") residual " +
                   to_string(subtract(lhs, rhs)));
    }
  Report report;
  report.add(std::move(check));
  return report;
}

std::optional<Vector> solve_inner(const LieAlgebra& lie, const Matrix& map) {
  const std::size_t n = lie.dim();
  if (map.rows() != n || map.cols() != n) throw Error(ErrorKind::DimensionMismatch, "solve_inner map shape");
  // ad(s)(k, j) = sum_i s_i c[i][j][k]: one equation per matrix entry.
  Matrix system(n * n, n);
  Vector rhs(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) system(k * n + j, i) = lie.constant(i, j, k);
      rhs[k * n + j] = map(k, j);
    }
  return solve_linear(system, rhs);
}

LieAlgebra change_basis(const LieAlgebra& lie, const Matrix& basis, std::vector<std::string> names) {
  const std::size_t n = lie.dim();
  if (basis.rows() != n || basis.cols() != n || names.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "change_basis shape");
  const auto inv = inverse(basis);
  if (!inv) throw Error(ErrorKind::InvalidParameter, "change_basis: basis matrix is singular");
  StructureConstants c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      c.set_bracket(i, j, *inv * bracket(lie, basis.column(i), basis.column(j)));
  return LieAlgebra(std::move(names), std::move(c));
}

}  // namespace phq
