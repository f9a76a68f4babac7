#pragma once

// Data-parallel kernels. Every kernel has a serial reference implementation
// and an OpenMP implementation that must agree with it exactly; the plain
// entry points pick one by problem size.

#include "najc/matrix.hpp"

#include <cstddef>
#include <vector>

namespace najc {

enum class Backend { automatic, serial, parallel };

struct RrefResult {
  Matrix reduced;                    // nonzero rows only
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;   // pivot column of each row
};

namespace kernels {

RrefResult rref_serial(Matrix m);
RrefResult rref_parallel(Matrix m);

/// Every componentwise product a_i * b_j, row index i * b.rows() + j.
Matrix pairwise_products_serial(const Matrix& a, const Matrix& b);
Matrix pairwise_products_parallel(const Matrix& a, const Matrix& b);

/// Below this many entries the automatic backend stays serial.
inline constexpr std::size_t parallel_threshold = 2048;

}  // namespace kernels

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m, Backend backend = Backend::automatic);

Matrix pairwise_products(const Matrix& a, const Matrix& b, Backend backend = Backend::automatic);

/// Basis (as rows) of {x : m x = 0}.
Matrix nullspace(const Matrix& m);

/// Caps OpenMP parallelism from the NAJC_THREADS environment variable.
void apply_thread_cap_from_env();

int max_threads();

}  // namespace najc
