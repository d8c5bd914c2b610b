#pragma once

// Random valid inputs for property tests and the acceptance run.

#include <optional>
#include <random>

#include "oracle.hpp"
#include "phq/catalog.hpp"
#include "phq/constructions.hpp"

namespace gen {

// phi-skew map G^{-1} A for an antisymmetric A with small entries.
inline phq::Matrix random_skew(std::mt19937& rng, const phq::Matrix& g) {
  const std::size_t n = g.rows();
  phq::Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      a(i, k) = oracle::small_rational(rng);
      a(k, i) = -a(i, k);
    }
  return *phq::inverse(g) * a;
}

// Extension data over an abelian base: D is a random skew map and F is a
// random solution of the remaining linear constraints [F,J] = -[JD,J],
// [F,D] = 0 inside the skew maps. Returns nullopt when D admits no F.
inline std::optional<phq::ExtensionData> try_extension_data(std::mt19937& rng, const phq::PHQAlgebra& base,
                                                            bool zero_d) {
  using phq::Matrix;
  const std::size_t n = base.dim();
  const Matrix& j = base.J();
  const Matrix ginv = *phq::inverse(base.phi());
  const Matrix d = zero_d ? Matrix(n, n) : random_skew(rng, base.phi());
  const Matrix jd = j * d;

  std::vector<Matrix> skew_basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      Matrix a(n, n);
      a(i, k) = 1;
      a(k, i) = -1;
      skew_basis.push_back(ginv * a);
    }
  const std::size_t m = skew_basis.size();
  Matrix system(2 * n * n, m);
  for (std::size_t c = 0; c < m; ++c) {
    const Matrix a = phq::commutator(skew_basis[c], j);
    const Matrix b = phq::commutator(skew_basis[c], d);
    for (std::size_t e = 0; e < n * n; ++e) {
      system(e, c) = a.entries()[e];
      system(n * n + e, c) = b.entries()[e];
    }
  }
  const Matrix target = -phq::commutator(jd, j);
  phq::Vector rhs = phq::zero_vector(2 * n * n);
  for (std::size_t e = 0; e < n * n; ++e) rhs[e] = target.entries()[e];
  std::optional<phq::Vector> x = phq::solve_linear(system, rhs);
  if (!x) return std::nullopt;
  for (const phq::Vector& k : phq::kernel(system).vectors())
    *x = phq::add(*x, phq::scaled(oracle::small_rational(rng), k));
  Matrix f(n, n);
  for (std::size_t c = 0; c < m; ++c) f = f + (*x)[c] * skew_basis[c];
  return phq::ExtensionData(base, d, f, oracle::random_vector(rng, n));
}

inline phq::ExtensionData random_extension_data(std::mt19937& rng, const phq::PHQAlgebra& base) {
  for (int attempt = 0; attempt < 20; ++attempt)
    if (auto e = try_extension_data(rng, base, false)) return *e;
  return *try_extension_data(rng, base, true);
}

inline const phq::PHQAlgebra& random_abelian_base(std::mt19937& rng) {
  static const phq::PHQAlgebra bases[] = {phq::build("R(2,0)"), phq::build("R(0,2)"), phq::build("R(2,2)")};
  return bases[std::uniform_int_distribution<int>(0, 2)(rng)];
}

}  // namespace gen
