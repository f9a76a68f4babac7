#include "najc/strings.hpp"

#include "najc/errors.hpp"

#include <charconv>

namespace najc {

int shift_of(Color c) {
  switch (c) {
    case Color::minus: return -1;
    case Color::zero: return 0;
    case Color::plus: return 1;
  }
  return 0;
}

Color opposite(Color c) {
  switch (c) {
    case Color::minus: return Color::plus;
    case Color::plus: return Color::minus;
    case Color::zero: return Color::zero;
  }
  return c;
}

char symbol(Color c) {
  switch (c) {
    case Color::minus: return '-';
    case Color::zero: return '0';
    case Color::plus: return '+';
  }
  return '?';
}

Vertex Step::start() const {
  return direction == Direction::forward ? Vertex{edge.origin, true} : Vertex{edge.target, false};
}

Vertex Step::end() const {
  return direction == Direction::forward ? Vertex{edge.target, false} : Vertex{edge.origin, true};
}

TrivalentGraph::TrivalentGraph(std::size_t weight) : weight_(weight) {
  if (weight == 0)
    throw DimensionMismatch("graph weight must be at least 1");
  for (std::size_t i = 0; i < weight; ++i) {
    edges_.push_back({i, i, Color::zero});
    edges_.push_back({i, (i + 1) % weight, Color::plus});
    edges_.push_back({i, (i + weight - 1) % weight, Color::minus});
  }
}

const Edge& TrivalentGraph::edge(std::size_t upper, Color color) const {
  if (upper >= weight_)
    throw InvalidPath("no upper vertex " + std::to_string(upper));
  const std::size_t slot = color == Color::zero ? 0 : color == Color::plus ? 1 : 2;
  return edges_[3 * upper + slot];
}

std::vector<Edge> TrivalentGraph::outgoing(std::size_t upper) const {
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (e.origin == upper)
      out.push_back(e);
  return out;
}

std::vector<Edge> TrivalentGraph::incoming(std::size_t lower) const {
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (e.target == lower)
      out.push_back(e);
  return out;
}

TrivalentGraph build_graph(std::size_t weight) { return TrivalentGraph(weight); }

Color effective_color(const Step& step) {
  return step.direction == Direction::forward ? step.edge.color : opposite(step.edge.color);
}

Path::Path(std::vector<Step> steps) : steps_(std::move(steps)) {}

int Path::total_shift() const {
  int total = 0;
  for (const auto& s : steps_)
    total += shift_of(effective_color(s));
  return total;
}

void Path::validate() const {
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i)
    if (!(steps_[i].end() == steps_[i + 1].start()))
      throw InvalidPath("step " + std::to_string(i + 2) + " does not start where step " +
                        std::to_string(i + 1) + " ends");
}

Path Path::parse(std::string_view text, const TrivalentGraph& graph) {
  std::vector<Step> steps;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

    const auto c1 = item.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : item.find(':', c1 + 1);
    if (c2 == std::string_view::npos || c2 + 2 != item.size())
      throw InvalidPath("malformed step '" + std::string(item) + "'");
    std::size_t upper = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + c1, upper);
    if (ec != std::errc{} || ptr != item.data() + c1)
      throw InvalidPath("bad vertex index in '" + std::string(item) + "'");
    const std::string_view color = item.substr(c1 + 1, c2 - c1 - 1);
    Color c;
    if (color == "0")
      c = Color::zero;
    else if (color == "+")
      c = Color::plus;
    else if (color == "-")
      c = Color::minus;
    else
      throw InvalidPath("bad color in '" + std::string(item) + "'");
    const char dir = item.back();
    if (dir != 'f' && dir != 'r')
      throw InvalidPath("bad direction in '" + std::string(item) + "'");
    steps.push_back({graph.edge(upper, c), dir == 'f' ? Direction::forward : Direction::reverse});
  }
  if (steps.empty())
    throw InvalidPath("empty path");
  Path path(std::move(steps));
  path.validate();
  return path;
}

Path concat(const Path& a, const Path& b) {
  std::vector<Step> steps = a.steps_;
  steps.insert(steps.end(), b.steps_.begin(), b.steps_.end());
  return Path(std::move(steps));
}

Matrix path_operator(const Decomposition& dec, const Path& path,
                     const std::vector<Vector>& multipliers) {
  path.validate();
  if (path.length() == 0)
    throw InvalidPath("empty path");
  if (multipliers.size() != 1 && multipliers.size() != path.length())
    throw DimensionMismatch("need one multiplier or one per step");
  const OperatorFrame frame(dec);
  Matrix result = Matrix::identity(frame.dim());
  for (std::size_t i = 0; i < path.length(); ++i) {
    const Vector& t = multipliers.size() == 1 ? multipliers[0] : multipliers[i];
    const GradedOperator op = mult_operator(dec, frame, t);
    result = op.band(shift_of(effective_color(path.steps()[i]))) * result;
  }
  return result;
}

}  // namespace najc
