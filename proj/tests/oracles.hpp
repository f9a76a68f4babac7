#pragma once

// Test-only oracles. None of these reuse the library's elimination, projection
// or operator code paths.

#include "najc/rational.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using najc::Rational;

/// Rank of the Vandermonde rows {t^0, ..., t^k} at distinct params: min(k + 1, d),
/// by direct Laplace expansion of the leading minor (a nonzero product of differences).
inline std::size_t vandermonde_rank(const std::vector<Rational>& params, std::size_t k) {
  const std::size_t n = std::min(k + 1, params.size());
  Rational det = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      det *= params[j] - params[i];
  return det != 0 ? n : 0;
}

/// exp(x) to well over 30 correct digits via exact Taylor sums and squaring.
inline Rational exp_taylor(const Rational& x) {
  int halvings = 0;
  Rational y = x;
  while (abs(y) > Rational(1, 4)) {
    y /= 2;
    ++halvings;
  }
  Rational term = 1, sum = 1;
  const Rational eps("1/1000000000000000000000000000000000000000");
  for (int n = 1; abs(term) > eps; ++n) {
    term *= y / n;
    sum += term;
  }
  for (int i = 0; i < halvings; ++i)
    sum *= sum;
  return sum;
}

/// Positive v rounded to `digits` significant digits in fixed notation.
inline std::string round_significant(const Rational& v, int digits) {
  // Find e with 10^(e-1) <= v < 10^e.
  int e = 0;
  mpz_class ten = 10;
  Rational scaled = v;
  while (scaled >= 1) {
    scaled /= 10;
    ++e;
  }
  while (scaled < Rational(1, 10)) {
    scaled *= 10;
    --e;
  }
  Rational big = scaled;
  for (int i = 0; i < digits; ++i)
    big *= 10;
  mpz_class q = big.get_num() / big.get_den();
  Rational frac = big - Rational(q);
  if (frac > Rational(1, 2) || (frac == Rational(1, 2) && q % 2 != 0))
    q += 1;
  std::string m = q.get_str();
  if (static_cast<int>(m.size()) > digits) {  // rounded up to a power of ten
    m.pop_back();
    ++e;
  }
  if (e <= 0)
    return "0." + std::string(static_cast<std::size_t>(-e), '0') + m;
  if (e >= digits)
    return m + std::string(static_cast<std::size_t>(e - digits), '0');
  return m.substr(0, e) + "." + m.substr(e);
}

/// Rank by plain Gaussian elimination on a copy of the rows.
inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0)
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0)
        continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline Rational small_rational(std::mt19937_64& rng) {
  Rational r(static_cast<long>(rng() % 15) - 7, static_cast<unsigned long>(rng() % 4) + 1);
  r.canonicalize();
  return r;
}

}  // namespace oracle
