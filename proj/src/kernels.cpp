#include "najc/kernels.hpp"

#include "najc/errors.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace najc {

namespace {

// Normalizes row r at column c and returns whether a pivot was found in rows [r, m.rows()).
bool place_pivot(Matrix& m, std::size_t r, std::size_t c) {
  std::size_t pivot = r;
  while (pivot < m.rows() && sgn(m(pivot, c)) == 0)
    ++pivot;
  if (pivot == m.rows())
    return false;
  m.swap_rows(pivot, r);
  Rational inv = 1 / m(r, c);
  for (std::size_t k = c; k < m.cols(); ++k)
    m(r, k) *= inv;
  return true;
}

void eliminate_row(Matrix& m, std::size_t target, std::size_t r, std::size_t c) {
  if (target == r || sgn(m(target, c)) == 0)
    return;
  Rational f = m(target, c);
  for (std::size_t k = c; k < m.cols(); ++k)
    m(target, k) -= f * m(r, k);
}

RrefResult finish(Matrix& m, std::size_t rank, std::vector<std::size_t> pivots) {
  return {m.row_range(0, rank), rank, std::move(pivots)};
}

}  // namespace

namespace kernels {

RrefResult rref_serial(Matrix m) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!place_pivot(m, r, c))
      continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      eliminate_row(m, i, r, c);
    pivots.push_back(c);
    ++r;
  }
  return finish(m, r, std::move(pivots));
}

RrefResult rref_parallel(Matrix m) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  const auto rows = static_cast<long>(m.rows());
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    if (!place_pivot(m, r, c))
      continue;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i)
      eliminate_row(m, static_cast<std::size_t>(i), r, c);
    pivots.push_back(c);
    ++r;
  }
  return finish(m, r, std::move(pivots));
}

Matrix pairwise_products_serial(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols())
    throw DimensionMismatch("pairwise products need equal widths");
  Matrix out(a.rows() * b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k)
        out(i * b.rows() + j, k) = a(i, k) * b(j, k);
  return out;
}

Matrix pairwise_products_parallel(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols())
    throw DimensionMismatch("pairwise products need equal widths");
  Matrix out(a.rows() * b.rows(), a.cols());
  const auto total = static_cast<long>(a.rows() * b.rows());
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < total; ++idx) {
    const auto i = static_cast<std::size_t>(idx) / b.rows();
    const auto j = static_cast<std::size_t>(idx) % b.rows();
    for (std::size_t k = 0; k < a.cols(); ++k)
      out(static_cast<std::size_t>(idx), k) = a(i, k) * b(j, k);
  }
  return out;
}

}  // namespace kernels

RrefResult rref(const Matrix& m, Backend backend) {
  if (backend == Backend::automatic)
    backend = m.rows() * m.cols() >= kernels::parallel_threshold && max_threads() > 1
                ? Backend::parallel
                : Backend::serial;
  return backend == Backend::parallel ? kernels::rref_parallel(m) : kernels::rref_serial(m);
}

Matrix pairwise_products(const Matrix& a, const Matrix& b, Backend backend) {
  if (backend == Backend::automatic)
    backend = a.rows() * b.rows() * a.cols() >= kernels::parallel_threshold && max_threads() > 1
                ? Backend::parallel
                : Backend::serial;
  return backend == Backend::parallel ? kernels::pairwise_products_parallel(a, b)
                                      : kernels::pairwise_products_serial(a, b);
}

Matrix nullspace(const Matrix& m) {
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots)
    is_pivot[p] = true;
  Matrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i)
      v[red.pivots[i]] = -red.reduced(i, free);
    basis.append_row(v);
  }
  return basis;
}

void apply_thread_cap_from_env() {
#ifdef _OPENMP
  const char* env = std::getenv("NAJC_THREADS");
  if (env == nullptr)
    return;
  char* end = nullptr;
  long cap = std::strtol(env, &end, 10);
  if (end == env || cap < 1)
    return;
  if (cap < omp_get_max_threads())
    omp_set_num_threads(static_cast<int>(cap));
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace najc
