#pragma once

#include "najc/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace najc {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
  static Matrix diagonal(std::span<const Rational> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;

  void swap_rows(std::size_t a, std::size_t b);
  void append_row(std::span<const Rational> values);

  /// Rows [begin, end) as a new matrix.
  Matrix row_range(std::size_t begin, std::size_t end) const;
  /// The sub-block rows [r0, r0 + nr) x cols [c0, c0 + nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& c, const Matrix& a);
Vector operator*(const Matrix& a, std::span<const Rational> v);

/// Stacks the rows of `top` above the rows of `bottom`.
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Bilinear pairing u^T G v.
Rational pairing(std::span<const Rational> u, const Matrix& gram, std::span<const Rational> v);

/// B G B^T for a matrix B whose rows are vectors.
Matrix restricted_gram(const Matrix& basis, const Matrix& gram);

Rational determinant(Matrix m);

/// Solves A x = b exactly for square nonsingular A. Throws DegenerateGram when singular.
Vector solve(const Matrix& a, std::span<const Rational> b);

std::vector<std::vector<std::string>> to_strings(const Matrix& m);

}  // namespace najc
