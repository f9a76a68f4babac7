#include "najc/matrix.hpp"

#include "najc/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace najc {

namespace {

void require_shape(bool ok, const char* what) {
  if (!ok)
    throw DimensionMismatch(what);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
  : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require_shape(r.size() == cols_, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows)
    m.append_row(r);
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m(i, i) = diag[i];
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r] = (*this)(r, c);
  return out;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out.push_back(row_vector(r));
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

void Matrix::append_row(std::span<const Rational> values) {
  require_shape(values.size() == cols_, "appended row has wrong length");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::row_range(std::size_t begin, std::size_t end) const {
  return block(begin, 0, end - begin, cols_);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require_shape(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c)
      b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_shape(r0 + b.rows() <= rows_ && c0 + b.cols() <= cols_, "block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return najc::is_zero(entries_); }

bool Matrix::is_symmetric() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r))
        return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(r, c) = a(r, c) + b(r, c);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(r, c) = a(r, c) - b(r, c);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_shape(a.cols() == b.rows(), "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(r, k);
      if (sgn(x) == 0)
        continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        out(r, c) += x * b(k, c);
    }
  return out;
}

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (auto& x : out.row(r))
      x *= c;
  return out;
}

Vector operator*(const Matrix& a, std::span<const Rational> v) {
  require_shape(a.cols() == v.size(), "matrix-vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    out[r] = dot(a.row(r), v);
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_shape(top.cols() == bottom.cols(), "vstack width mismatch");
  Matrix out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    out.append_row(bottom.row(r));
  return out;
}

Rational pairing(std::span<const Rational> u, const Matrix& gram, std::span<const Rational> v) {
  return dot(u, gram * v);
}

Matrix restricted_gram(const Matrix& basis, const Matrix& gram) {
  require_shape(gram.rows() == basis.cols() && gram.cols() == basis.cols(),
                "gram does not match ambient dimension");
  return basis * gram * basis.transpose();
}

Rational determinant(Matrix m) {
  require_shape(m.rows() == m.cols(), "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(m(pivot, c)) == 0)
      ++pivot;
    if (pivot == n)
      return 0;
    if (pivot != c) {
      m.swap_rows(pivot, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0)
        continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k)
        m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Vector solve(const Matrix& a, std::span<const Rational> b) {
  require_shape(a.rows() == a.cols() && a.rows() == b.size(), "solve shape mismatch");
  const std::size_t n = a.rows();
  Matrix m(n, n + 1);
  m.set_block(0, 0, a);
  for (std::size_t r = 0; r < n; ++r)
    m(r, n) = b[r];
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(m(pivot, c)) == 0)
      ++pivot;
    if (pivot == n)
      throw DegenerateGram("singular system");
    m.swap_rows(pivot, c);
    Rational inv = 1 / m(c, c);
    for (std::size_t k = c; k <= n; ++k)
      m(c, k) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m(r, c)) == 0)
        continue;
      Rational f = m(r, c);
      for (std::size_t k = c; k <= n; ++k)
        m(r, k) -= f * m(c, k);
    }
  }
  return m.column(n);
}

std::vector<std::vector<std::string>> to_strings(const Matrix& m) {
  std::vector<std::vector<std::string>> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    out.push_back(to_strings(m.row(r)));
  return out;
}

}  // namespace najc
