#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace phq {

/// Exact rational scalar. GMP keeps every value canonical (reduced, positive
/// denominator, zero as 0/1) after each arithmetic operation.
///
/// gmpxx uses expression templates: never bind an arithmetic expression to
/// `auto`, always materialize it as a Rational.
using Rational = mpq_class;

/// Coordinate vector over the rationals.
using Vector = std::vector<Rational>;

/// Parses "p", "-p", "p/q" or "-p/q" (decimal digits only, q != 0).
/// Throws Error(BadRational) on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scaled(const Rational& factor, const Vector& v);
Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

/// "(a, b, c)" with canonical rational strings.
std::string to_string(const Vector& v);

}  // namespace phq
