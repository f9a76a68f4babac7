#include "najc/kernels.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace najc;

TEST_CASE("parallel rref agrees with the serial reference") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 40;
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m(r, c) = rng() % 4 == 0 ? Rational(0) : oracle::small_rational(rng);
    const auto serial = kernels::rref_serial(m);
    const auto parallel = kernels::rref_parallel(m);
    CHECK(serial.reduced == parallel.reduced);
    CHECK(serial.pivots == parallel.pivots);
    CHECK(rref(m, Backend::automatic).reduced == serial.reduced);
  }
}

TEST_CASE("parallel pairwise products agree with the serial reference") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t cols = 1 + rng() % 10;
    Matrix a(1 + rng() % 6, cols), b(1 + rng() % 6, cols);
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t r = 0; r < a.rows(); ++r)
        a(r, c) = oracle::small_rational(rng);
      for (std::size_t r = 0; r < b.rows(); ++r)
        b(r, c) = oracle::small_rational(rng);
    }
    const Matrix s = kernels::pairwise_products_serial(a, b);
    CHECK(s == kernels::pairwise_products_parallel(a, b));
    CHECK(s.row_vector(0) == hadamard(a.row(0), b.row(0)));
  }
}

TEST_CASE("nullspace") {
  const Matrix m{{1, 1, 1, 1}};
  const Matrix k = nullspace(m);
  CHECK(k.rows() == 3);
  CHECK((m * k.transpose()).is_zero());
  CHECK(nullspace(Matrix::identity(3)).rows() == 0);
}
