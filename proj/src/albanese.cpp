#include "najc/albanese.hpp"

#include "najc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace najc {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error("lattice determinant overflows 64 bits");
  return static_cast<std::int64_t>(v);
}

// Fraction-free Bareiss elimination; exact for integer matrices.
std::int64_t determinant(std::vector<std::int64_t> m, std::size_t n) {
  if (n == 0)
    return 1;
  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap * n + k] == 0)
        ++swap;
      if (swap == n)
        return 0;
      for (std::size_t c = 0; c < n; ++c)
        std::swap(m[k * n + c], m[swap * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(m[i * n + j]) * m[k * n + k] -
                             static_cast<__int128>(m[i * n + k]) * m[k * n + j];
        m[i * n + j] = checked(num / prev);
      }
    prev = m[k * n + k];
  }
  return sign * m[(n - 1) * n + (n - 1)];
}

std::int64_t dot(const LatticePoint& a, const LatticePoint& b) {
  __int128 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += static_cast<__int128>(a[i]) * b[i];
  return checked(acc);
}

// Candidate facet through the generators in `subset`, or nothing.
std::optional<Facet> facet_through(const std::vector<LatticePoint>& gens,
                                   const std::vector<std::size_t>& subset) {
  const std::size_t n = subset.size();
  std::vector<std::int64_t> m(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m[r * n + c] = gens[subset[r]][c];
  std::int64_t det = determinant(m, n);
  if (det == 0)
    return std::nullopt;
  // Cramer: normal_j = det of m with column j replaced by ones, so that v . normal = det.
  LatticePoint normal(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto mj = m;
    for (std::size_t r = 0; r < n; ++r)
      mj[r * n + j] = 1;
    normal[j] = determinant(std::move(mj), n);
  }
  if (det < 0) {
    det = -det;
    for (auto& x : normal)
      x = -x;
  }
  std::vector<std::size_t> on;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto value = dot(normal, gens[i]);
    if (value > det)
      return std::nullopt;
    if (value == det)
      on.push_back(i);
  }
  std::int64_t g = det;
  for (auto x : normal)
    g = std::gcd(g, x);
  for (auto& x : normal)
    x /= g;
  return Facet{std::move(normal), det / g, std::move(on)};
}

}  // namespace

LatticePolytope LatticePolytope::from_generators(const std::vector<LatticePoint>& generators) {
  if (generators.empty())
    throw DimensionMismatch("polytope needs generators");
  const std::size_t dim = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != dim)
      throw DimensionMismatch("generators of mixed dimension");

  // Every dim-subset of generators; candidate facets are tested independently.
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> idx(dim);
  std::iota(idx.begin(), idx.end(), 0);
  while (dim <= generators.size()) {
    subsets.push_back(idx);
    std::size_t i = dim;
    while (i > 0 && idx[i - 1] == generators.size() - dim + i - 1)
      --i;
    if (i == 0)
      break;
    ++idx[i - 1];
    for (std::size_t j = i; j < dim; ++j)
      idx[j] = idx[j - 1] + 1;
  }

  std::vector<std::optional<Facet>> found(subsets.size());
  const auto count = static_cast<long>(subsets.size());
#pragma omp parallel for schedule(static)
  for (long s = 0; s < count; ++s)
    found[s] = facet_through(generators, subsets[s]);

  std::set<std::vector<std::size_t>> seen;
  std::vector<Facet> facets;
  std::set<std::size_t> on_boundary;
  for (auto& f : found) {
    if (!f || !seen.insert(f->vertices).second)
      continue;
    on_boundary.insert(f->vertices.begin(), f->vertices.end());
    facets.push_back(std::move(*f));
  }
  if (facets.size() < dim + 1)
    throw DimensionMismatch("generators do not span a full-dimensional polytope around 0");

  LatticePolytope p;
  p.dimension_ = dim;
  std::vector<std::size_t> remap(generators.size());
  for (auto g : on_boundary) {
    remap[g] = p.vertices_.size();
    p.vertices_.push_back(generators[g]);
  }
  for (auto& f : facets)
    for (auto& v : f.vertices)
      v = remap[v];
  p.facets_ = std::move(facets);
  return p;
}

bool LatticePolytope::simplicial() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.vertices.size() == dimension_; });
}

std::int64_t LatticePolytope::normalized_volume() const {
  if (!simplicial())
    throw Error("normalized volume is only implemented for simplicial polytopes");
  std::int64_t total = 0;
  for (const auto& f : facets_) {
    std::vector<std::int64_t> m;
    for (auto v : f.vertices)
      m.insert(m.end(), vertices_[v].begin(), vertices_[v].end());
    total += std::abs(determinant(std::move(m), dimension_));
  }
  return total;
}

std::size_t LatticePolytope::interior_point_count() const {
  LatticePoint lo(dimension_, INT64_MAX), hi(dimension_, INT64_MIN);
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < dimension_; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  std::size_t count = 0;
  LatticePoint x = lo;
  while (true) {
    const bool inside = std::all_of(facets_.begin(), facets_.end(),
                                    [&](const Facet& f) { return dot(f.normal, x) < f.rhs; });
    count += inside ? 1 : 0;
    std::size_t i = 0;
    while (i < dimension_ && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == dimension_)
      break;
    ++x[i];
  }
  return count;
}

std::vector<Vector> LatticePolytope::dual_vertices() const {
  std::vector<Vector> out;
  for (const auto& f : facets_) {
    Vector v;
    for (auto x : f.normal) {
      v.push_back(ratio(static_cast<long>(x), static_cast<long>(f.rhs)));
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool LatticePolytope::dual_integral() const {
  return std::all_of(facets_.begin(), facets_.end(), [](const Facet& f) {
    return std::all_of(f.normal.begin(), f.normal.end(),
                       [&](std::int64_t x) { return x % f.rhs == 0; });
  });
}

namespace {

LatticePolytope exponent_polytope(std::size_t weight) {
  const std::size_t dim = weight - 1;
  std::vector<LatticePoint> gens{LatticePoint(dim, 0)};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::int64_t sign : {1, -1}) {
      LatticePoint e(dim, 0);
      e[i] = sign;
      gens.push_back(std::move(e));
    }
  return LatticePolytope::from_generators(gens);
}

}  // namespace

AlbaneseModel::AlbaneseModel(std::size_t weight) : weight_(weight) {
  if (weight < 2)
    throw WeightTooSmall("the Albanese model needs weight >= 2");
  names_.push_back("T");
  for (std::size_t p = 0; p + 1 < weight; ++p)
    names_.push_back("X" + std::to_string(p));
  for (std::size_t p = 0; p + 1 < weight; ++p)
    names_.push_back("Y" + std::to_string(p));
  polytope_ = exponent_polytope(weight);
}

Vector quadric_residuals(const AlbaneseModel& model, std::span<const Rational> point) {
  if (point.size() != model.coordinate_count())
    throw DimensionMismatch("point needs 2w - 1 coordinates");
  if (is_zero(point))
    throw ZeroPoint("the zero vector is not a projective point");
  const std::size_t k = model.quadric_count();
  Vector out;
  for (std::size_t p = 0; p < k; ++p)
    out.push_back(point[1 + p] * point[1 + k + p] - point[0] * point[0]);
  return out;
}

Vector torus_point(const AlbaneseModel& model, const Rational& s, std::span<const Rational> lambdas) {
  if (lambdas.size() != model.quadric_count())
    throw DimensionMismatch("torus chart needs w - 1 parameters");
  if (sgn(s) == 0 || std::any_of(lambdas.begin(), lambdas.end(),
                                 [](const Rational& l) { return sgn(l) == 0; }))
    throw ZeroParameter("torus parameters must be nonzero");
  Vector out{s};
  for (const auto& l : lambdas)
    out.push_back(s * l);
  for (const auto& l : lambdas)
    out.push_back(s / l);
  return out;
}

std::int64_t degree_via_volume(std::size_t weight) {
  return AlbaneseModel(weight).polytope().normalized_volume();
}

FanoReport fano_check(std::size_t weight) {
  const AlbaneseModel model(weight);
  FanoReport r;
  r.dimension = model.polytope().dimension();
  r.interior_points = model.polytope().interior_point_count();
  r.dual_integral = model.polytope().dual_integral();
  r.reflexive = r.interior_points == 1 && r.dual_integral;
  if (weight >= 3)
    r.cy_section_dimension = weight - 2;
  return r;
}

}  // namespace najc
