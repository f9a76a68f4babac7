#pragma once

#include "najc/higgs.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace najc {

enum class Color { minus, zero, plus };

/// Grading shift of the operator carried by a color: -1, 0 or +1.
int shift_of(Color c);
Color opposite(Color c);
char symbol(Color c);

struct Vertex {
  std::size_t index = 0;
  bool upper = true;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Oriented from the upper vertex `origin`_u to the lower vertex `target`_d.
struct Edge {
  std::size_t origin = 0;
  std::size_t target = 0;
  Color color = Color::zero;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Direction { forward, reverse };

struct Step {
  Edge edge;
  Direction direction = Direction::forward;

  Vertex start() const;
  Vertex end() const;
};

/// w vertical rungs i_u -> i_d, and diagonals i_u -> (i +- 1)_d with wraparound.
class TrivalentGraph {
public:
  explicit TrivalentGraph(std::size_t weight);

  std::size_t weight() const { return weight_; }
  std::size_t vertex_count() const { return 2 * weight_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// The edge of the given color leaving upper vertex i.
  const Edge& edge(std::size_t upper, Color color) const;
  std::vector<Edge> outgoing(std::size_t upper) const;
  std::vector<Edge> incoming(std::size_t lower) const;

private:
  std::size_t weight_;
  std::vector<Edge> edges_;  // three per upper vertex, colors 0, +, - in that order
};

TrivalentGraph build_graph(std::size_t weight);

/// Forward steps keep the natural color; reversed steps take the opposite one.
Color effective_color(const Step& step);

class Path {
public:
  Path() = default;
  explicit Path(std::vector<Step> steps);

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  /// Sum of the effective shifts along the path.
  int total_shift() const;

  /// Throws InvalidPath if consecutive steps are not incident.
  void validate() const;

  /// Parses "i:{0|+|-}:{f|r}" steps separated by commas.
  static Path parse(std::string_view text, const TrivalentGraph& graph);

  friend Path concat(const Path& a, const Path& b);

private:
  std::vector<Step> steps_;
};

Path concat(const Path& a, const Path& b);

/// D^{c_l}(t_l) o ... o D^{c_1}(t_1). A single multiplier is used for every step.
Matrix path_operator(const Decomposition& dec, const Path& path,
                     const std::vector<Vector>& multipliers);

}  // namespace najc
