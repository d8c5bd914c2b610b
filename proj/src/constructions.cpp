#include "phq/constructions.hpp"

#include <set>

#include "phq/error.hpp"

namespace phq {

namespace {

std::string triple_label(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," + std::to_string(c + 1) + ")";
}

bool is_skew(const Matrix& g, const Matrix& map) { return (g * map + map.transpose() * g).is_zero(); }

Check renamed(Check check, std::string name) {
  check.name = std::move(name);
  return check;
}

// theta(x, y)(w) for coordinate vectors.
Rational form(const Cocycle& t, const Vector& x, const Vector& y, const Vector& w) {
  return dot(t.evaluate(x, y), w);
}

}  // namespace

std::vector<std::string> unique_names(std::vector<std::string> names) {
  std::set<std::string> used;
  for (auto& name : names) {
    while (used.count(name)) name += "'";
    used.insert(name);
  }
  return names;
}

QuadraticAlgebra line_double_extension(const QuadraticAlgebra& q, const Matrix& d) {
  const std::size_t n = q.algebra.dim();
  if (d.rows() != n || d.cols() != n || q.phi.rows() != n || q.phi.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "line_double_extension: shapes");
  if (!is_skew(q.phi, d)) throw Error(ErrorKind::InvalidDerivation, "D is not skew for the metric");
  const Report der = is_derivation(q.algebra, d);
  if (!der.passed()) throw Error(ErrorKind::InvalidDerivation, "D is not a derivation: " + der.checks()[0].details[0]);

  const std::size_t z = 0, v = n + 1;
  StructureConstants c(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c.add(i + 1, j + 1, k + 1, q.algebra.constant(i, j, k));
      c.add(i + 1, j + 1, z, bilinear(q.phi, d.column(i), unit_vector(n, j)));
    }
    for (std::size_t k = 0; k < n; ++k) c.add(v, i + 1, k + 1, d(k, i));
  }
  Matrix g(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i + 1, j + 1) = q.phi(i, j);
  g(z, v) = g(v, z) = 1;

  std::vector<std::string> names{"z"};
  names.insert(names.end(), q.algebra.basis_names().begin(), q.algebra.basis_names().end());
  names.push_back("v");
  return {LieAlgebra(unique_names(std::move(names)), std::move(c)), std::move(g)};
}

// ---------------------------------------------------------------------------

Cocycle::Cocycle(std::size_t dim) : dim_(dim), values_(dim * dim * dim) {}

void Cocycle::set(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(ErrorKind::IndexOutOfRange, "Cocycle::set");
  if (i == j) {
    if (value != 0) throw Error(ErrorKind::InvalidCocycle, "theta(x,x) must vanish");
    return;
  }
  values_[(i * dim_ + j) * dim_ + k] = value;
  values_[(j * dim_ + i) * dim_ + k] = -value;
}

Vector Cocycle::evaluate(const Vector& x, const Vector& y) const {
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) out[k] += w * (*this)(i, j, k);
    }
  }
  return out;
}

Cocycle operator+(const Cocycle& a, const Cocycle& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::DimensionMismatch, "cocycle sum");
  Cocycle out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] += b.values_[i];
  return out;
}

Cocycle operator*(const Rational& s, const Cocycle& a) {
  Cocycle out = a;
  for (auto& value : out.values_) value *= s;
  return out;
}

Cocycle combine(const std::vector<Cocycle>& basis, const Vector& coeffs) {
  if (basis.empty() || basis.size() != coeffs.size()) throw Error(ErrorKind::DimensionMismatch, "combine");
  Cocycle out(basis.front().dim());
  for (std::size_t i = 0; i < basis.size(); ++i) out = out + coeffs[i] * basis[i];
  return out;
}

Report check_cocycle(const LieAlgebra& lie, const Matrix& j, const Cocycle& theta) {
  const std::size_t n = lie.dim();
  if (theta.dim() != n || j.rows() != n || j.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "check_cocycle: shapes");

  Check cyclic{"cyclic", true, {}};
  Check closed{"cocycle", true, {}};
  Check compatible{"J-compatible", true, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (theta(a, b, c) != theta(b, c, a))
          cyclic.fail("theta(e" + std::to_string(a + 1) + ",e" + std::to_string(b + 1) + ")e" +
                      std::to_string(c + 1) + " != theta(e" + std::to_string(b + 1) + ",e" +
                      std::to_string(c + 1) + ")e" + std::to_string(a + 1));

        const Vector x = unit_vector(n, a), y = unit_vector(n, b), z = unit_vector(n, c);
        const Vector jx = j * x, jy = j * y, jz = j * z;
        const Rational rhs = form(theta, jx, jy, z) + form(theta, jy, jz, x) + form(theta, jz, jx, y);
        if (theta(a, b, c) != rhs) compatible.fail("triple " + triple_label(a, b, c));

        // d theta(x,y,z)(w), with the coadjoint action (x.f)(w) = -f([x,w]).
        for (std::size_t d = 0; d < n; ++d) {
          Rational value = 0;
          for (std::size_t m = 0; m < n; ++m) {
            value -= lie.constant(a, d, m) * theta(b, c, m);
            value += lie.constant(b, d, m) * theta(a, c, m);
            value -= lie.constant(c, d, m) * theta(a, b, m);
            value -= lie.constant(a, b, m) * theta(m, c, d);
            value += lie.constant(a, c, m) * theta(m, b, d);
            value -= lie.constant(b, c, m) * theta(m, a, d);
          }
          if (value != 0)
            closed.fail("d theta" + triple_label(a, b, c) + " on e" + std::to_string(d + 1) + " = " +
                        to_string(value));
        }
      }
  Report report;
  report.add(std::move(cyclic));
  report.add(std::move(closed));
  report.add(std::move(compatible));
  return report;
}

PHQAlgebra tstar_extension(const LieAlgebra& lie, const Matrix& j, const Cocycle& theta) {
  const std::size_t n = lie.dim();
  const Report complex = check_complex(lie, j);
  if (!complex.passed()) throw Error(ErrorKind::InvalidStructure, "J fails " + complex.failed_names());
  const Report cocycle = check_cocycle(lie, j, theta);
  if (!cocycle.passed()) throw Error(ErrorKind::InvalidCocycle, "theta fails " + cocycle.failed_names());

  StructureConstants c(2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        c.add(a, b, k, lie.constant(a, b, k));
        c.add(a, b, n + k, theta(a, b, k));
      }
    // [x_a, x_b*] = -x_b* o ad(x_a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) c.add(a, n + b, n + k, -lie.constant(a, k, b));
  }

  Matrix jt(2 * n, 2 * n), g(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    g(r, n + r) = g(n + r, r) = 1;
    for (std::size_t s = 0; s < n; ++s) {
      jt(r, s) = j(r, s);
      jt(n + r, n + s) = -j(s, r);
    }
  }
  std::vector<std::string> names = lie.basis_names();
  for (const auto& name : lie.basis_names()) names.push_back(name + "*");
  return PHQAlgebra(LieAlgebra(unique_names(std::move(names)), std::move(c)), std::move(jt), std::move(g));
}

std::vector<Cocycle> kodaira_cocycle_basis() {
  // theta(x_a, x_b) = x_k* triples (1-based) for theta_1 .. theta_4
  struct Entry {
    std::size_t a, b, k;
    int sign;
  };
  const std::vector<std::vector<Entry>> table{
      {{1, 2, 3, 1}, {1, 3, 2, -1}, {2, 3, 1, 1}},
      {{1, 2, 4, 1}, {1, 4, 2, -1}, {2, 4, 1, 1}},
      {{1, 3, 4, 1}, {1, 4, 3, -1}, {3, 4, 1, 1}},
      {{2, 3, 4, 1}, {2, 4, 3, -1}, {3, 4, 2, 1}},
  };
  std::vector<Cocycle> out;
  for (const auto& rows : table) {
    Cocycle t(4);
    for (const auto& e : rows) t.set(e.a - 1, e.b - 1, e.k - 1, e.sign);
    out.push_back(std::move(t));
  }
  return out;
}

// ---------------------------------------------------------------------------

CommutativeAlgebra::CommutativeAlgebra(std::vector<std::string> names, std::vector<Rational> products, Matrix b)
    : names_(std::move(names)), products_(std::move(products)), b_(std::move(b)) {
  const std::size_t n = names_.size();
  if (products_.size() != n * n * n || b_.rows() != n || b_.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "CommutativeAlgebra: shapes");
}

Report CommutativeAlgebra::validate() const {
  const std::size_t n = dim();
  Check commutative{"commutative", true, {}};
  Check associative{"associative", true, {}};
  Check symmetric{"symmetric", true, {}};
  Check nondegenerate{"nondegenerate", true, {}};
  Check invariant{"invariant", true, {}};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (b_(i, j) != b_(j, i)) symmetric.fail("B(a" + std::to_string(i + 1) + ",a" + std::to_string(j + 1) + ")");
      for (std::size_t k = 0; k < n; ++k) {
        if (product(i, j, k) != product(j, i, k)) commutative.fail("triple " + triple_label(i, j, k));
        Rational lhs_inv = 0, rhs_inv = 0;
        for (std::size_t m = 0; m < n; ++m) {
          lhs_inv += product(i, j, m) * b_(m, k);
          rhs_inv += b_(j, m) * product(i, k, m);
        }
        if (lhs_inv != rhs_inv) invariant.fail("B(ab,c) != B(b,ac) at " + triple_label(i, j, k));
        for (std::size_t l = 0; l < n; ++l) {
          Rational left = 0, right = 0;
          for (std::size_t m = 0; m < n; ++m) {
            left += product(i, j, m) * product(m, k, l);
            right += product(j, k, m) * product(i, m, l);
          }
          if (left != right) associative.fail("triple " + triple_label(i, j, k));
        }
      }
    }
  if (determinant(b_) == 0) nondegenerate.fail("det(B) = 0");

  Report report;
  for (auto* check : {&commutative, &associative, &symmetric, &nondegenerate, &invariant})
    report.add(std::move(*check));
  return report;
}

CommutativeAlgebra truncated_poly(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidParameter, "truncated_poly needs k >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back(i == 1 ? std::string("a") : "a" + std::to_string(i));
  // index i stands for a^(i+1)
  std::vector<Rational> products(k * k * k);
  Matrix b(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i + j + 2 <= k) products[(i * k + j) * k + (i + j + 1)] = 1;
      if (i + j + 2 == k + 1) b(i, j) = 1;
    }
  return CommutativeAlgebra(std::move(names), std::move(products), std::move(b));
}

CommutativeAlgebra complex_numbers() {
  std::vector<Rational> products(8);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return products[(i * 2 + j) * 2 + k]; };
  at(0, 0, 0) = 1;
  at(0, 1, 1) = 1;
  at(1, 0, 1) = 1;
  at(1, 1, 0) = -1;
  return CommutativeAlgebra({"1", "i"}, std::move(products), Matrix::diagonal({1, -1}));
}

PHQAlgebra tensor_construct(const PHQAlgebra& p, const CommutativeAlgebra& a) {
  const Report valid = a.validate();
  if (!valid.passed()) throw Error(ErrorKind::InvalidAlgebraData, "algebra fails " + valid.failed_names());
  const std::size_t n = p.dim(), k = a.dim(), total = n * k;
  StructureConstants c(total);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = i + 1; r < n; ++r)
      for (std::size_t m = 0; m < n; ++m) {
        const Rational& lie_coeff = p.algebra().constant(i, r, m);
        if (lie_coeff == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
          for (std::size_t s = 0; s < k; ++s)
            for (std::size_t t = 0; t < k; ++t) {
              const Rational& alg_coeff = a.product(j, s, t);
              if (alg_coeff != 0) c.add(i * k + j, r * k + s, m * k + t, lie_coeff * alg_coeff);
            }
      }
  std::vector<std::string> names;
  for (const auto& x : p.algebra().basis_names())
    for (const auto& y : a.names()) names.push_back(x + "." + y);
  return PHQAlgebra(LieAlgebra(unique_names(std::move(names)), std::move(c)), kronecker(p.J(), Matrix::identity(k)),
                    kronecker(p.phi(), a.B()));
}

PHQAlgebra complexify(const PHQAlgebra& p) { return tensor_construct(p, complex_numbers()); }

PHQAlgebra direct_sum(const PHQAlgebra& p, const PHQAlgebra& q) {
  const std::size_t n = p.dim(), m = q.dim();
  StructureConstants c(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c.add(i, j, k, p.algebra().constant(i, j, k));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) c.add(n + i, n + j, n + k, q.algebra().constant(i, j, k));
  std::vector<std::string> names = p.algebra().basis_names();
  names.insert(names.end(), q.algebra().basis_names().begin(), q.algebra().basis_names().end());
  return PHQAlgebra(LieAlgebra(unique_names(std::move(names)), std::move(c)), block_diagonal(p.J(), q.J()),
                    block_diagonal(p.phi(), q.phi()));
}

// ---------------------------------------------------------------------------

Report validate_extension_data(const PHQAlgebra& base, const Matrix& d, const Matrix& f, const Vector& s0) {
  const std::size_t n = base.dim();
  if (d.rows() != n || d.cols() != n || f.rows() != n || f.cols() != n || s0.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "extension data shapes do not match the base");
  const Matrix& g = base.phi();
  const Matrix& j = base.J();
  Report report;

  Check d_skew{"D-skew", true, {}};
  if (!is_skew(g, d)) d_skew.fail("G D + D^T G != 0");
  Check f_skew{"F-skew", true, {}};
  if (!is_skew(g, f)) f_skew.fail("G F + F^T G != 0");
  report.add(std::move(d_skew));
  report.add(std::move(f_skew));
  report.add(renamed(is_derivation(base.algebra(), d).checks()[0], "D-derivation"));
  report.add(renamed(is_derivation(base.algebra(), f).checks()[0], "F-derivation"));

  Check j_condition{"[F+JD,J]=0", true, {}};
  const Matrix jc = commutator(f + j * d, j);
  if (!jc.is_zero()) j_condition.fail("[F+JD,J] = " + to_string(jc));
  report.add(std::move(j_condition));

  Check inner{"[F,D]=ad(s0)", true, {}};
  const Matrix defect = adjoint(base.algebra(), s0) - commutator(f, d);
  if (!defect.is_zero()) inner.fail("ad(s0) - [F,D] = " + to_string(defect));
  report.add(std::move(inner));
  return report;
}

ExtensionData::ExtensionData(PHQAlgebra base, Matrix d, Matrix f, Vector s0)
    : base_(std::move(base)), d_(std::move(d)), f_(std::move(f)), s0_(std::move(s0)) {
  const Report report = validate_extension_data(base_, d_, f_, s0_);
  for (const auto& check : report.checks())
    if (!check.passed)
      throw Error(ErrorKind::InvalidExtensionData,
                  check.name + " violated" + (check.details.empty() ? "" : ": " + check.details.front()));
}

PHQAlgebra phq_double_extension(const ExtensionData& e) {
  const PHQAlgebra& base = e.base();
  const std::size_t n = base.dim(), total = n + 4;
  const std::size_t z = 0, zp = 1, vp = n + 2, v = n + 3;
  const Matrix& g = base.phi();
  auto x = [](std::size_t i) { return i + 2; };

  StructureConstants c(total);
  for (std::size_t k = 0; k < n; ++k) c.add(v, vp, x(k), e.s0()[k]);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = unit_vector(n, i);
    const Rational s0_x = bilinear(g, e.s0(), ei);
    for (std::size_t k = 0; k < n; ++k) {
      c.add(v, x(i), x(k), e.F()(k, i));
      c.add(vp, x(i), x(k), e.D()(k, i));
    }
    c.add(v, x(i), zp, -s0_x);
    c.add(vp, x(i), z, s0_x);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector ej = unit_vector(n, j);
      for (std::size_t k = 0; k < n; ++k) c.add(x(i), x(j), x(k), base.algebra().constant(i, j, k));
      c.add(x(i), x(j), zp, bilinear(g, e.D().column(i), ej));
      c.add(x(i), x(j), z, bilinear(g, e.F().column(i), ej));
    }
  }

  Matrix j(total, total), phi(total, total);
  j(zp, z) = 1;
  j(z, zp) = -1;
  j(vp, v) = 1;
  j(v, vp) = -1;
  phi(z, v) = phi(v, z) = 1;
  phi(zp, vp) = phi(vp, zp) = 1;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      j(x(r), x(s)) = base.J()(r, s);
      phi(x(r), x(s)) = g(r, s);
    }

  std::vector<std::string> names{"z", "z'"};
  names.insert(names.end(), base.algebra().basis_names().begin(), base.algebra().basis_names().end());
  names.push_back("v'");
  names.push_back("v");
  return PHQAlgebra(LieAlgebra(unique_names(std::move(names)), std::move(c)), std::move(j), std::move(phi));
}

ExtensionData swap_DF(const ExtensionData& e) { return ExtensionData(e.base(), -e.F(), e.D(), e.s0()); }

Matrix swap_witness(const ExtensionData& e) {
  const std::size_t n = e.base().dim(), total = n + 4;
  const std::size_t z = 0, zp = 1, vp = n + 2, v = n + 3;
  Matrix psi(total, total);
  psi(zp, z) = 1;
  psi(z, zp) = -1;
  psi(vp, v) = 1;
  psi(v, vp) = -1;
  for (std::size_t i = 0; i < n; ++i) psi(i + 2, i + 2) = 1;
  return psi;
}

}  // namespace phq
