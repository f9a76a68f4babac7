#pragma once

#include "najc/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace najc {

/// d labeled points. Functions on the points are vectors in Q^d indexed in label order.
class Configuration {
public:
  Configuration() = default;
  explicit Configuration(std::vector<std::string> labels);

  /// Labels "z1", ..., "zd".
  static Configuration numbered(std::size_t d);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  /// Throws UnknownLabel.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

private:
  std::vector<std::string> labels_;
};

/// The space E of extension classes, as a delta x d matrix of value vectors.
class ExtSpace {
public:
  ExtSpace(Configuration config, Matrix basis);

  const Configuration& config() const { return config_; }
  const Matrix& basis() const { return basis_; }
  std::size_t delta() const { return basis_.rows(); }

  friend bool operator==(const ExtSpace&, const ExtSpace&) = default;

private:
  Configuration config_;
  Matrix basis_;
};

/// A class alpha in E, kept both as coefficients and as its values on the points.
class ExtClass {
public:
  ExtClass(const ExtSpace& space, Vector coeffs);

  const Vector& coeffs() const { return coeffs_; }
  const Vector& values() const { return values_; }

  friend bool operator==(const ExtClass&, const ExtClass&) = default;

private:
  Vector coeffs_;
  Vector values_;
};

struct Metadata {
  std::optional<int> n;
  std::optional<int> h0L;
  std::optional<std::string> family;

  /// Fewer points than sections of L on the line surrogate (d < h0L).
  bool sub_generic(std::size_t d) const;
  /// Weight expected for the surrogate complete intersection, n + 1.
  std::optional<int> weight_bound() const { return n ? std::optional<int>(*n + 1) : std::nullopt; }

  friend bool operator==(const Metadata&, const Metadata&) = default;
};

struct AnalysisInput {
  ExtSpace ext;
  ExtClass alpha;
  Metadata metadata;

  const Configuration& config() const { return ext.config(); }

  /// Same input with alpha's coefficients multiplied by c.
  AnalysisInput with_scaled_alpha(const Rational& c) const;
  /// Same input with points reordered: new point i is old point order[i].
  AnalysisInput permuted(const std::vector<std::size_t>& order) const;

  friend bool operator==(const AnalysisInput&, const AnalysisInput&) = default;
};

/// Gram matrix of the trace pairing sum_z f(z) g(z) in the delta-function basis.
Matrix trace_gram(const Configuration& config);

struct RegularityResult {
  bool regular = true;
  std::optional<std::size_t> witness;  // first point where alpha vanishes

  explicit operator bool() const { return regular; }
};

RegularityResult is_regular(const ExtClass& alpha);

/// A linear form c -> sum_i coeffs[i] c_i in the delta coordinates of E.
struct LinearForm {
  Vector coeffs;

  Rational evaluate(std::span<const Rational> c) const;
};

/// One form per point: c -> (c . basis)(z). The theta hypersurface is their product.
std::vector<LinearForm> theta_polynomial(const ExtSpace& ext);

/// Product of the theta forms at c.
Rational evaluate_theta(const std::vector<LinearForm>& forms, std::span<const Rational> c);

// Generators -------------------------------------------------------------

/// E = span{1, t} at the given pairwise distinct parameter values; alpha = 1.
AnalysisInput generate_power(const Vector& params, std::vector<std::string> labels = {});

/// Line surrogate for a complete intersection cluster of codimension n.
AnalysisInput generate_ci_line(const Vector& params, int n, std::vector<std::string> labels = {});

/// Seeded pseudo-random full-rank E and a regular alpha.
AnalysisInput generate_random(std::size_t d, std::size_t delta, std::uint64_t seed);

}  // namespace najc
