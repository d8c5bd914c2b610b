#include "phq/reduction.hpp"

#include "phq/error.hpp"

namespace phq {

namespace {

Matrix as_columns(const Subspace& s) { return s.basis().transpose(); }

bool is_central(const LieAlgebra& lie, const Vector& x) { return adjoint(lie, x).is_zero(); }

Subspace central_j_part(const PHQAlgebra& p) {
  const Subspace c = center(p.algebra());
  return intersect(c, image(p.J(), c));
}

// Coordinates 2..n-3 of a vector in the adapted basis (z, z', base..., v', v).
Vector base_part(const Vector& x) { return Vector(x.begin() + 2, x.end() - 2); }

}  // namespace

std::optional<Vector> nonisotropic_vector(const Subspace& w, const Matrix& g) {
  const auto basis = w.vectors();
  for (const auto& b : basis)
    if (bilinear(g, b, b) != 0) return b;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Vector s = add(basis[i], basis[j]);
      if (bilinear(g, s, s) != 0) return s;
    }
  return std::nullopt;
}

CentralPair find_central_pair(const PHQAlgebra& p) {
  CentralPair out;
  out.w = central_j_part(p);
  if (out.w.is_zero()) throw Error(ErrorKind::EmptyIntersection, "center ∩ J(center) is zero");
  const Subspace in_derived = intersect(out.w, derived(p.algebra()));
  if (!in_derived.is_zero()) {
    out.kind = PairKind::derived;
    out.z = in_derived.basis_vector(0);
    return out;
  }
  if (auto z = nonisotropic_vector(out.w, p.phi())) {
    out.kind = PairKind::definite;
    out.z = std::move(*z);
    return out;
  }
  out.kind = PairKind::stuck;
  return out;
}

SplitResult split_plane(const PHQAlgebra& p, const Vector& z) {
  if (z.size() != p.dim()) throw Error(ErrorKind::DimensionMismatch, "split_plane: vector length");
  const Vector jz = p.J() * z;
  if (!is_central(p.algebra(), z) || !is_central(p.algebra(), jz))
    throw Error(ErrorKind::NotDefinitePlane, "z and Jz must be central");
  const Rational norm = bilinear(p.phi(), z, z);
  if (norm == 0) throw Error(ErrorKind::NotDefinitePlane, "phi(z,z) = 0");

  const Subspace plane = Subspace::span(p.dim(), {z, jz});
  const Matrix basis = as_columns(orthogonal_complement(plane, p.phi()));
  auto names = subspace_names(p.algebra().basis_names(), basis, "u");
  return {restrict_to(p, basis, std::move(names)), sign(norm), basis};
}

ReductionStep reduce_by_plane(const PHQAlgebra& p, const Vector& z) {
  const std::size_t n = p.dim();
  if (z.size() != n) throw Error(ErrorKind::DimensionMismatch, "reduce_by_plane: vector length");
  const Matrix& g = p.phi();
  const Vector jz = p.J() * z;
  if (is_zero(z)) throw Error(ErrorKind::InvalidCentralElement, "z = 0");
  if (!is_central(p.algebra(), z) || !is_central(p.algebra(), jz))
    throw Error(ErrorKind::InvalidCentralElement, "z and Jz must be central");
  if (bilinear(g, z, z) != 0) throw Error(ErrorKind::NonIsotropic, "phi(z,z) = " + to_string(bilinear(g, z, z)));
  if (!derived(p.algebra()).contains(z)) throw Error(ErrorKind::InvalidCentralElement, "z is not in [g,g]");

  // phi(z,v) = 1, phi(Jz,v) = 0, then make v isotropic.
  const Matrix system = Matrix::from_rows({g * z, g * jz}, n);
  auto solved = solve_linear(system, {1, 0});
  if (!solved) throw Error(ErrorKind::InvalidCentralElement, "z and Jz are linearly dependent");
  Vector v = *solved;
  v = subtract(v, scaled(bilinear(g, v, v) / 2, z));
  const Vector jv = p.J() * v;

  const Subspace plane = Subspace::span(n, {z, jz, v, jv});
  const Subspace base = orthogonal_complement(plane, g);
  std::vector<Vector> columns{z, jz};
  for (const auto& b : base.vectors()) columns.push_back(b);
  columns.push_back(jv);
  columns.push_back(v);
  const Matrix adapted = Matrix::from_columns(columns, n);

  const Matrix base_cols = as_columns(base);
  std::vector<std::string> names{"z", "z'"};
  auto base_names = subspace_names(p.algebra().basis_names(), base_cols, "u");
  names.insert(names.end(), base_names.begin(), base_names.end());
  names.push_back("v'");
  names.push_back("v");
  const PHQAlgebra adapted_algebra = change_basis(p, adapted, unique_names(std::move(names)));

  // In adapted coordinates z = 0, z' = 1, base = 2.., v' = m+2, v = m+3.
  const std::size_t m = base.dim();
  const LieAlgebra& lie = adapted_algebra.algebra();
  StructureConstants c0(m);
  Matrix d(m, m), f(m, m), j0(m, m), g0(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = i + 1; k < m; ++k) c0.set_bracket(i, k, base_part(lie.basis_bracket(i + 2, k + 2)));
    d.set_column(i, base_part(lie.basis_bracket(m + 2, i + 2)));
    f.set_column(i, base_part(lie.basis_bracket(m + 3, i + 2)));
    for (std::size_t k = 0; k < m; ++k) {
      j0(k, i) = adapted_algebra.J()(k + 2, i + 2);
      g0(k, i) = adapted_algebra.phi()(k + 2, i + 2);
    }
  }
  const Vector s0 = base_part(lie.basis_bracket(m + 3, m + 2));
  PHQAlgebra recovered(LieAlgebra(std::move(base_names), std::move(c0)), std::move(j0), std::move(g0));

  ReductionStep step;
  step.kind = StepKind::plane_reduction;
  step.input = p;
  step.z = z;
  step.v = v;
  step.recovered = recovered;
  step.extension.emplace(std::move(recovered), std::move(d), std::move(f), s0);
  step.basis = adapted;
  return step;
}

Reduction full_reduction(const PHQAlgebra& p) {
  if (!nilpotency_index(p.algebra())) throw Error(ErrorKind::NotNilpotent, "full_reduction needs a nilpotent algebra");
  Reduction out;
  PHQAlgebra current = p;
  while (!is_abelian(current.algebra())) {
    const CentralPair pair = find_central_pair(current);
    if (pair.kind == PairKind::stuck)
      throw Error(ErrorKind::ReductionStuck,
                  "center ∩ J(center) is totally isotropic and meets [g,g] trivially (dim " +
                      std::to_string(current.dim()) + ")");
    if (pair.kind == PairKind::derived) {
      ReductionStep step = reduce_by_plane(current, pair.z);
      current = step.recovered;
      out.steps.push_back(std::move(step));
    } else {
      SplitResult split = split_plane(current, pair.z);
      ReductionStep step;
      step.kind = StepKind::split_plane;
      step.input = current;
      step.z = pair.z;
      step.sign = split.sign;
      step.recovered = split.complement;
      step.basis = split.basis;
      current = std::move(split.complement);
      out.steps.push_back(std::move(step));
    }
  }
  out.residue = std::move(current);
  return out;
}

Peeled peel_definite_planes(const PHQAlgebra& p) {
  Peeled out;
  PHQAlgebra current = p;
  while (current.dim() > 0) {
    auto z = nonisotropic_vector(central_j_part(current), current.phi());
    if (!z) break;
    SplitResult split = split_plane(current, *z);
    if (split.sign > 0) out.removed.positive += 2;
    else out.removed.negative += 2;
    ReductionStep step;
    step.kind = StepKind::split_plane;
    step.input = current;
    step.z = *z;
    step.sign = split.sign;
    step.recovered = split.complement;
    step.basis = split.basis;
    current = std::move(split.complement);
    out.steps.push_back(std::move(step));
  }
  out.core = std::move(current);
  return out;
}

SkewPairAnalysis analyze_skew_pair(const PHQAlgebra& base, const Matrix& f, const Matrix& d) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::HypothesisViolated, what);
  };
  require(base.dim() == 4, "base must be 4-dimensional");
  const std::size_t n = 4;
  require(f.rows() == n && f.cols() == n && d.rows() == n && d.cols() == n, "maps must be 4x4");
  const Matrix& g = base.phi();
  const Matrix& j = base.J();
  require(signature(g) == Signature{2, 2}, "metric must be neutral");
  require(!f.is_zero(), "F != 0");
  require((g * f + f.transpose() * g).is_zero(), "F skew");
  require((g * d + d.transpose() * g).is_zero(), "D skew");
  require((f * f * f * f).is_zero(), "F nilpotent");
  require((d * d * d * d).is_zero(), "D nilpotent");
  require(commutator(f, d).is_zero(), "[F,D] = 0");
  require(commutator(f + j * d, j).is_zero(), "[F+JD,J] = 0");

  SkewPairAnalysis out;
  out.kernel = kernel(f);
  const Subspace im = image(f, Subspace::full(n));
  Check shape{"Ker(F)=J(Ker F)=Im(F)", true, {}};
  if (!(image(j, out.kernel) == out.kernel) || !(im == out.kernel))
    shape.fail("dim Ker F = " + std::to_string(out.kernel.dim()) + ", dim Im F = " + std::to_string(im.dim()));
  Check isotropic{"Ker(F) isotropic", true, {}};
  if (!(out.kernel.basis() * g * as_columns(out.kernel)).is_zero()) isotropic.fail("phi restricted to Ker F != 0");
  require(shape.passed && isotropic.passed, shape.passed ? isotropic.name : shape.name);

  const Vector u1 = out.kernel.basis_vector(0);
  const Vector ju1 = j * u1;
  auto solved = solve_linear(Matrix::from_rows({g * u1, g * ju1}, n), {1, 0});
  require(solved.has_value(), "no u2 with phi(u1,u2) = 1");
  Vector u2 = subtract(*solved, scaled(bilinear(g, *solved, *solved) / 2, u1));
  const Vector ju2 = j * u2;
  out.adapted = Matrix::from_columns({u1, ju1, u2, ju2}, n);

  auto coefficient_on_ju1 = [&](const Vector& image_u2, const char* name) {
    auto c = coordinates(Matrix::from_columns({u1, ju1}, n), image_u2);
    require(c && (*c)[0] == 0, std::string(name) + "(u2) is not a multiple of Ju1");
    return (*c)[1];
  };
  out.a = coefficient_on_ju1(f * u2, "F");
  out.b = coefficient_on_ju1(d * u2, "D");

  Check form{"adapted form", true, {}};
  if (f * ju2 != scaled(-out.a, u1)) form.fail("F(Ju2) != -a u1");
  if (d * ju2 != scaled(-out.b, u1)) form.fail("D(Ju2) != -b u1");
  if (!is_zero(d * u1) || !is_zero(d * ju1)) form.fail("D does not vanish on Ker F");
  Check metric{"adapted metric", true, {}};
  const Matrix gram = out.adapted.transpose() * g * out.adapted;
  const Matrix expected{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  if (gram != expected) metric.fail("Gram matrix " + to_string(gram));
  require(out.a != 0, "a != 0");

  out.checks.add(std::move(shape));
  out.checks.add(std::move(isotropic));
  out.checks.add(std::move(form));
  out.checks.add(std::move(metric));
  return out;
}

}  // namespace phq
