#pragma once

#include "najc/model.hpp"
#include "najc/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace najc {

/// The multiplicative filtration H~_{-1} c H~_{-2} c ... c H~_{-w} of Q^d.
struct Filtration {
  std::vector<Subspace> steps;       // steps[k] is H~_{-(k+1)}
  std::vector<std::size_t> hilbert;  // hilbert[k] = rank(steps[k]), the Hilbert function P(k+1)
  std::size_t weight = 0;            // number of steps until stabilization

  const Subspace& step(std::size_t level) const { return steps.at(level - 1); }
  const Subspace& top() const { return steps.back(); }
};

/// The orthogonal splitting Q^d = H^0 + ... + H^w.
struct Decomposition {
  std::vector<Subspace> summands;       // w + 1 slots; H^w may be zero
  Matrix adapted_basis;                 // d x d, summand bases stacked in order
  std::vector<std::size_t> block_offsets;  // w + 2 entries; summand p occupies rows [off[p], off[p+1])
  Matrix gram;

  std::size_t weight() const { return summands.size() - 1; }
  std::size_t ambient_dim() const { return adapted_basis.cols(); }
  const Subspace& h0() const { return summands.front(); }
  std::size_t rank(std::size_t p) const { return block_offsets[p + 1] - block_offsets[p]; }
  std::vector<std::size_t> ranks() const;
  /// Rows of the adapted basis spanning H~_{-w} = H^0 + ... + H^{w-1}.
  Matrix operator_basis() const;
  std::size_t operator_dim() const { return block_offsets[weight()]; }

  /// Assembles the adapted basis from explicit summands; performs no checks.
  static Decomposition assemble(std::vector<Subspace> summands, Matrix gram);
};

/// span{beta / alpha : beta a basis row of E}. Throws NotRegular.
Subspace h_tilde_one(const ExtSpace& ext, const ExtClass& alpha);

/// Iterates H~_{-(k+1)} = H~_{-1} * H~_{-k} until the rank stops growing.
/// Throws MissingUnit unless the all-ones vector lies in h1.
Filtration build_filtration(const Subspace& h1);

struct PolarizingResult {
  bool polarizing = true;
  std::optional<std::size_t> failing_level;  // 1-based k

  explicit operator bool() const { return polarizing; }
};

PolarizingResult is_polarizing(const Filtration& f, const Matrix& gram);

/// H^p = (H~_{-p})^perp n H~_{-(p+1)}, H^w = (H~_{-w})^perp. Throws NotPolarizing.
Decomposition decompose(const Filtration& f, const Matrix& gram);

struct KappaFibers {
  std::vector<std::vector<std::string>> fibers;
  std::size_t degree = 0;
};

/// Groups points that no function of h1 separates.
KappaFibers kappa_fibers(const Subspace& h1, const Configuration& config);

/// Convenience: h_tilde_one -> build_filtration -> decompose with the trace form.
struct HodgeData {
  Subspace h1;
  Filtration filtration;
  Decomposition decomposition;
};

HodgeData analyze_hodge(const AnalysisInput& input);

}  // namespace najc
