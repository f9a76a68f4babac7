#pragma once

#include "najc/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace najc {

/// A linear subspace of Q^d, stored by the RREF of any spanning set. Two
/// subspaces are equal iff their stored bases are identical.
class Subspace {
public:
  /// The zero subspace of Q^ambient_dim.
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace whole(std::size_t ambient_dim);
  /// Subspace spanned by the rows of `generators`.
  static Subspace from_rows(const Matrix& generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of a member v in the RREF basis (its entries at the pivot columns).
  Vector coordinates(std::span<const Rational> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_dim_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim);

Subspace sum_spaces(const Subspace& a, const Subspace& b);

/// Intersection via the Zassenhaus block system [[A, A], [B, 0]].
Subspace intersect(const Subspace& a, const Subspace& b);

/// {v in within : v^T gram u = 0 for every u in s}.
Subspace orth_complement(const Subspace& s, const Matrix& gram, const Subspace& within);

/// The gram-orthogonal projection of v onto s. Throws DegenerateGram when the
/// form restricted to s is degenerate.
Vector project(std::span<const Rational> v, const Subspace& s, const Matrix& gram);

}  // namespace najc
