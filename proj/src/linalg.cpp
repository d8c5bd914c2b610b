#include "phq/linalg.hpp"

#include <utility>

#include "phq/error.hpp"

namespace phq {

EchelonForm rref(Matrix a) {
  EchelonForm out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rational factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Rational determinant(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  Matrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational factor = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = a(i, j);
    augmented(i, n + i) = 1;
  }
  EchelonForm e = rref(std::move(augmented));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw Error(ErrorKind::DimensionMismatch, "solve_linear: rows != length(b)");
  Matrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) augmented(i, j) = a(i, j);
    augmented(i, a.cols()) = b[i];
  }
  EchelonForm e = rref(std::move(augmented));
  Vector x = zero_vector(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::row_space(const Matrix& rows) {
  EchelonForm e = rref(rows);
  Subspace s(rows.cols());
  Matrix basis(e.pivots.size(), rows.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) basis(i, j) = e.reduced(i, j);
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) { return row_space(Matrix::identity(ambient_dim)); }

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "Subspace::contains");
  // Reduce v against the echelon basis; v is inside iff nothing remains.
  Vector rest = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t pivot = 0;
    while (basis_(r, pivot) == 0) ++pivot;
    if (rest[pivot] == 0) continue;
    const Rational factor = rest[pivot];
    for (std::size_t j = 0; j < ambient_; ++j) rest[j] -= factor * basis_(r, j);
  }
  return phq::is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace kernel(const Matrix& a) {
  EchelonForm e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> generators;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x = zero_vector(a.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, free);
    generators.push_back(std::move(x));
  }
  return Subspace::span(a.cols(), generators);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace sum");
  auto vectors = u.vectors();
  auto more = v.vectors();
  vectors.insert(vectors.end(), more.begin(), more.end());
  return Subspace::span(u.ambient_dim(), vectors);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace intersection");
  // U ∩ V is cut out by the union of the linear equations defining U and V.
  const Subspace eq_u = kernel(u.basis());
  const Subspace eq_v = kernel(v.basis());
  return kernel(sum(eq_u, eq_v).basis());
}

Subspace image(const Matrix& map, const Subspace& u) {
  if (map.cols() != u.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace image");
  std::vector<Vector> images;
  for (const auto& b : u.vectors()) images.push_back(map * b);
  return Subspace::span(map.rows(), images);
}

Subspace orthogonal_complement(const Subspace& u, const Matrix& g) {
  if (g.rows() != u.ambient_dim() || !g.is_square())
    throw Error(ErrorKind::DimensionMismatch, "orthogonal_complement");
  return kernel(u.basis() * g);
}

std::optional<Vector> coordinates(const Matrix& basis, const Vector& v) {
  return solve_linear(basis, v);
}

Signature operator+(const Signature& a, const Signature& b) {
  return {a.positive + b.positive, a.negative + b.negative};
}

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
}

namespace {

// Symmetric Schur-complement step: keeps `rest` indices other than the pivot
// block and replaces G by G_rr - G_rp P^{-1} G_pr.
Matrix schur_complement(const Matrix& g, const std::vector<std::size_t>& pivot,
                        const Matrix& pivot_inverse) {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    bool in_pivot = false;
    for (std::size_t p : pivot) in_pivot = in_pivot || p == i;
    if (!in_pivot) rest.push_back(i);
  }
  Matrix out(rest.size(), rest.size());
  for (std::size_t a = 0; a < rest.size(); ++a) {
    for (std::size_t b = 0; b < rest.size(); ++b) {
      Rational value = g(rest[a], rest[b]);
      for (std::size_t s = 0; s < pivot.size(); ++s)
        for (std::size_t t = 0; t < pivot.size(); ++t)
          value -= g(rest[a], pivot[s]) * pivot_inverse(s, t) * g(pivot[t], rest[b]);
      out(a, b) = value;
    }
  }
  return out;
}

}  // namespace

Signature signature(const Matrix& g) {
  if (!g.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "signature of a non-symmetric matrix");
  Signature result;
  Matrix current = g;
  while (current.rows() > 0) {
    const std::size_t n = current.rows();
    std::size_t diag = n;
    for (std::size_t i = 0; i < n && diag == n; ++i)
      if (current(i, i) != 0) diag = i;
    if (diag != n) {
      if (current(diag, diag) > 0) ++result.positive;
      else ++result.negative;
      Matrix inv{{1 / current(diag, diag)}};
      current = schur_complement(current, {diag}, inv);
      continue;
    }
    std::size_t p = n, q = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (current(i, j) != 0) {
          p = i;
          q = j;
          break;
        }
    if (p == n) break;  // the remaining block is zero: degenerate directions
    const Rational a = current(p, q);
    result.positive += 1;
    result.negative += 1;
    Matrix inv{{0, 1 / a}, {1 / a, 0}};
    current = schur_complement(current, {p, q}, inv);
  }
  return result;
}

}  // namespace phq
