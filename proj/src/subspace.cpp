#include "najc/subspace.hpp"

#include "najc/errors.hpp"
#include "najc/kernels.hpp"

#include <string>

namespace najc {

namespace {

void require_dim(std::size_t a, std::size_t b) {
  if (a != b)
    throw DimensionMismatch("ambient dimensions differ: " + std::to_string(a) + " vs " +
                            std::to_string(b));
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::whole(std::size_t ambient_dim) {
  return from_rows(Matrix::identity(ambient_dim));
}

Subspace Subspace::from_rows(const Matrix& generators) {
  Subspace s(generators.cols());
  auto red = rref(generators);
  s.basis_ = std::move(red.reduced);
  s.pivots_ = std::move(red.pivots);
  return s;
}

bool Subspace::contains(std::span<const Rational> v) const {
  require_dim(v.size(), ambient_dim_);
  Vector residual(v.begin(), v.end());
  for (std::size_t i = 0; i < rank(); ++i) {
    Rational c = residual[pivots_[i]];
    if (sgn(c) == 0)
      continue;
    for (std::size_t k = 0; k < ambient_dim_; ++k)
      residual[k] -= c * basis_(i, k);
  }
  return is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
  require_dim(other.ambient_dim_, ambient_dim_);
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_.row(i)))
      return false;
  return true;
}

Vector Subspace::coordinates(std::span<const Rational> v) const {
  if (!contains(v))
    throw DimensionMismatch("vector is not a member of the subspace");
  Vector c(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    c[i] = v[pivots_[i]];
  return c;
}

Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim) {
  for (const auto& v : vectors)
    require_dim(v.size(), ambient_dim);
  return Subspace::from_rows(Matrix::from_rows(vectors, ambient_dim));
}

Subspace sum_spaces(const Subspace& a, const Subspace& b) {
  require_dim(a.ambient_dim(), b.ambient_dim());
  return Subspace::from_rows(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_dim(a.ambient_dim(), b.ambient_dim());
  const std::size_t d = a.ambient_dim();
  Matrix system(a.rank() + b.rank(), 2 * d);
  system.set_block(0, 0, a.basis());
  system.set_block(0, d, a.basis());
  system.set_block(a.rank(), 0, b.basis());
  const auto red = rref(system);
  Matrix meet(0, d);
  for (std::size_t i = 0; i < red.rank; ++i)
    if (red.pivots[i] >= d)
      meet.append_row(red.reduced.row(i).subspan(d, d));
  return Subspace::from_rows(meet);
}

Subspace orth_complement(const Subspace& s, const Matrix& gram, const Subspace& within) {
  require_dim(s.ambient_dim(), within.ambient_dim());
  require_dim(gram.rows(), s.ambient_dim());
  require_dim(gram.cols(), s.ambient_dim());
  if (s.rank() == 0)
    return within;
  // Conditions on coefficients c of v = sum c_i w_i: sum_i c_i (u_j^T G w_i) = 0.
  const Matrix conditions = s.basis() * gram * within.basis().transpose();
  const Matrix coeffs = nullspace(conditions);
  return Subspace::from_rows(coeffs * within.basis());
}

Vector project(std::span<const Rational> v, const Subspace& s, const Matrix& gram) {
  require_dim(v.size(), s.ambient_dim());
  if (s.rank() == 0)
    return Vector(v.size(), Rational(0));
  const Matrix g = restricted_gram(s.basis(), gram);
  if (sgn(determinant(g)) == 0)
    throw DegenerateGram("form is degenerate on the target subspace");
  const Vector rhs = s.basis() * (gram * v);
  const Vector a = solve(g, rhs);
  Vector p(v.size(), Rational(0));
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k)
      p[k] += a[i] * s.basis()(i, k);
  return p;
}

}  // namespace najc
