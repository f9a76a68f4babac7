#pragma once

#include "najc/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace najc {

using LatticePoint = std::vector<std::int64_t>;

/// Facet inequality normal . x <= rhs with a primitive integer normal.
struct Facet {
  LatticePoint normal;
  std::int64_t rhs = 0;
  std::vector<std::size_t> vertices;  // indices into LatticePolytope::vertices()
};

/// Convex hull of integer generators. The origin must lie in the interior.
class LatticePolytope {
public:
  static LatticePolytope from_generators(const std::vector<LatticePoint>& generators);

  std::size_t dimension() const { return dimension_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  bool simplicial() const;

  /// dim! times the Euclidean volume, summed over the cones from the origin
  /// over each (simplicial) facet.
  std::int64_t normalized_volume() const;
  std::size_t interior_point_count() const;
  /// Vertices of the polar dual {y : x . y <= 1}: normal / rhs for each facet.
  std::vector<Vector> dual_vertices() const;
  bool dual_integral() const;

private:
  std::size_t dimension_ = 0;
  std::vector<LatticePoint> vertices_;
  std::vector<Facet> facets_;
};

/// Quadrics X_p Y_p = T^2 in P(V) with coordinates [T, X_0.., Y_0..].
class AlbaneseModel {
public:
  explicit AlbaneseModel(std::size_t weight);

  std::size_t weight() const { return weight_; }
  std::size_t coordinate_count() const { return 2 * weight_ - 1; }
  std::size_t quadric_count() const { return weight_ - 1; }
  std::size_t projective_dimension() const { return 2 * weight_ - 2; }
  const std::vector<std::string>& coordinates() const { return names_; }
  /// conv{0, +-e_1, ..., +-e_{w-1}}, the exponent polytope of the torus chart.
  const LatticePolytope& polytope() const { return polytope_; }

private:
  std::size_t weight_;
  std::vector<std::string> names_;
  LatticePolytope polytope_;
};

/// X_p Y_p - T^2 for each p. Throws ZeroPoint for the zero vector.
Vector quadric_residuals(const AlbaneseModel& model, std::span<const Rational> point);

/// (s, s l_0, ..., s / l_0, ...). Throws ZeroParameter.
Vector torus_point(const AlbaneseModel& model, const Rational& s, std::span<const Rational> lambdas);

std::int64_t degree_via_volume(std::size_t weight);

struct FanoReport {
  std::size_t dimension = 0;
  std::size_t interior_points = 0;
  bool dual_integral = false;
  bool reflexive = false;
  std::optional<std::size_t> cy_section_dimension;
};

FanoReport fano_check(std::size_t weight);

}  // namespace najc
