#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "phq/rational.hpp"

namespace phq {

/// Dense row-major rational matrix. Linear maps act on coordinate columns:
/// column j holds the coordinates of the image of basis vector j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix diagonal(const Vector& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Rational& at(std::size_t i, std::size_t j);
  const Rational& at(std::size_t i, std::size_t j) const;

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& values);

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  /// Row-major entries, rows() * cols() of them.
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& x);

/// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);

/// x^T G y
Rational bilinear(const Matrix& g, const Vector& x, const Vector& y);

/// Kronecker product; block (i,j) is a(i,j) * b.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Block-diagonal sum of two matrices.
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Rows separated by newlines, entries by spaces.
std::string to_string(const Matrix& m);

}  // namespace phq
