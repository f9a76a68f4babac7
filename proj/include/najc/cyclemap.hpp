#pragma once

#include "najc/higgs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace najc {

/// Exact exponents of one section t T + sum x_p X_p + sum y_p Y_p, where
/// t = exp(e_T), x_p = exp(e_X[p]), y_p = exp(e_Y[p]).
struct SectionExponents {
  std::string point;
  Rational e_T;
  Vector e_X;
  Vector e_Y;

  friend bool operator==(const SectionExponents&, const SectionExponents&) = default;
};

/// The degree-d divisor: one hyperplane section per point.
struct CycleDivisor {
  std::size_t weight = 0;
  std::vector<SectionExponents> sections;

  /// Dimension w - 2 of the Calabi-Yau hyperplane sections, defined for w >= 3.
  std::optional<std::size_t> calabi_yau_dimension() const;

  friend bool operator==(const CycleDivisor&, const CycleDivisor&) = default;
};

/// Orthogonal projection of the delta function at `label` onto H^0. Throws UnknownLabel.
Vector delta_zero(const Decomposition& dec, const Configuration& config, const std::string& label);

/// [delta^(0), ..., delta^(w-1)] with delta^(p) = D+(delta0)^p delta0, delta^(p) in H^p.
std::vector<Vector> right_string(const Decomposition& dec, std::span<const Rational> delta0);

/// Entry m is D-(delta0)^m applied to `top`, i.e. the element lying in H^{w-1-m}.
std::vector<Vector> left_string(const Decomposition& dec, std::span<const Rational> delta0,
                                std::span<const Rational> top);

/// Throws WeightTooSmall when w < 2.
SectionExponents section_exponents(const Decomposition& dec, const Configuration& config,
                                   const std::string& label);

CycleDivisor cycle_map(const Decomposition& dec, const Configuration& config);

struct RenderedSection {
  std::string point;
  std::string t;
  std::vector<std::string> x;
  std::vector<std::string> y;
};

/// exp(e) with `digits` significant decimal digits, rounded to nearest (ties to even).
std::string render_exp(const Rational& exponent, int digits);

std::vector<RenderedSection> render_float(const CycleDivisor& divisor, int digits);

}  // namespace najc
