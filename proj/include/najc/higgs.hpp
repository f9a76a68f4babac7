#pragma once

#include "najc/hodge.hpp"
#include "najc/kernels.hpp"

#include <cstddef>
#include <vector>

namespace najc {

/// Multiplication by t in H^0, restricted to H~_{-w} and written in the adapted
/// basis of H^0 + ... + H^{w-1}. Matrices act on column coordinate vectors.
struct GradedOperator {
  Vector t;
  Matrix full;
  std::vector<std::size_t> offsets;  // w + 1 entries: summand p occupies [offsets[p], offsets[p+1])

  std::size_t weight() const { return offsets.size() - 1; }
  std::size_t dim() const { return full.rows(); }

  /// Component H^p -> H^q. Out-of-range summands give an empty matrix.
  Matrix block(std::size_t p, std::size_t q) const;
  /// The m x m matrix keeping only blocks H^p -> H^{p+shift}.
  Matrix band(int shift) const;
  /// True when every block with |shift| > 1 vanishes.
  bool is_tridiagonal() const;
};

struct Split {
  Matrix minus;
  Matrix zero;
  Matrix plus;
};

/// Coordinates of functions in H~_{-w} with respect to the adapted basis.
class OperatorFrame {
public:
  explicit OperatorFrame(const Decomposition& dec);

  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  /// Throws LeakageError if v is not in H~_{-w}.
  Vector coordinates(std::span<const Rational> v) const;
  Vector function(std::span<const Rational> coords) const;

private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
  Matrix inverse_;  // maps v restricted to pivot columns to coordinates
};

enum class BandCheck { enforce, skip };

/// Throws NotInH0, or LeakageError when enforced bands are violated.
GradedOperator mult_operator(const Decomposition& dec, std::span<const Rational> t,
                             BandCheck check = BandCheck::enforce);
GradedOperator mult_operator(const Decomposition& dec, const OperatorFrame& frame,
                             std::span<const Rational> t, BandCheck check = BandCheck::enforce);

Split split(const GradedOperator& op);

struct RelationReport {
  bool higgs_ok = true;
  std::size_t checked_pairs = 0;
};

/// Checks the graded pieces of D ^ D = 0 on every ordered pair of H^0 basis
/// vectors. Throws RelationViolation naming the pair and relation.
RelationReport verify_relations(const Decomposition& dec, Backend backend = Backend::automatic);

/// z D0 + sum x_p D+_p + sum y_p D-_{p+1} for one multiplier.
Matrix deformed_operator(const GradedOperator& op, const Rational& z, std::span<const Rational> x,
                         std::span<const Rational> y);

/// Verifies D(z, x, y) ^ D(z, x, y) = 0 on H^0 basis pairs. Requires x_p y_p = z^2
/// (InputNotOnVariety otherwise).
bool higgs_family_check(const Decomposition& dec, const Rational& z, std::span<const Rational> x,
                        std::span<const Rational> y);

/// A(t)B(s) - A(s)B(t) for matrices already evaluated at t and s.
Matrix wedge(const Matrix& a_t, const Matrix& b_s, const Matrix& a_s, const Matrix& b_t);

}  // namespace najc
