#include "najc/model.hpp"

#include "najc/errors.hpp"
#include "najc/kernels.hpp"

#include <random>
#include <set>

namespace najc {

Configuration::Configuration(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty())
    throw SchemaError("a configuration needs at least one point");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw SchemaError("duplicate point label '" + l + "'");
}

Configuration Configuration::numbered(std::size_t d) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= d; ++i)
    labels.push_back("z" + std::to_string(i));
  return Configuration(std::move(labels));
}

std::size_t Configuration::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label)
      return i;
  throw UnknownLabel("no point labeled '" + label + "'");
}

ExtSpace::ExtSpace(Configuration config, Matrix basis)
  : config_(std::move(config)), basis_(std::move(basis)) {
  if (basis_.cols() != config_.size())
    throw DimensionMismatch("extension basis rows must have one value per point");
  if (basis_.rows() == 0)
    throw SchemaError("extension space must have dimension at least 1");
  if (rref(basis_).rank != basis_.rows())
    throw SchemaError("extension basis rows are linearly dependent");
}

ExtClass::ExtClass(const ExtSpace& space, Vector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != space.delta())
    throw DimensionMismatch("class needs one coefficient per basis vector of E");
  values_.assign(space.config().size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t z = 0; z < values_.size(); ++z)
      values_[z] += coeffs_[i] * space.basis()(i, z);
}

bool Metadata::sub_generic(std::size_t d) const {
  return h0L.has_value() && static_cast<long>(d) < *h0L;
}

AnalysisInput AnalysisInput::with_scaled_alpha(const Rational& c) const {
  return {ext, ExtClass(ext, scaled(alpha.coeffs(), c)), metadata};
}

AnalysisInput AnalysisInput::permuted(const std::vector<std::size_t>& order) const {
  const std::size_t d = config().size();
  if (order.size() != d)
    throw DimensionMismatch("permutation length differs from point count");
  std::vector<std::string> labels;
  Matrix basis(ext.delta(), d);
  for (std::size_t i = 0; i < d; ++i) {
    labels.push_back(config().label(order.at(i)));
    for (std::size_t r = 0; r < ext.delta(); ++r)
      basis(r, i) = ext.basis()(r, order[i]);
  }
  ExtSpace space(Configuration(std::move(labels)), std::move(basis));
  ExtClass cls(space, alpha.coeffs());
  return {std::move(space), std::move(cls), metadata};
}

Matrix trace_gram(const Configuration& config) { return Matrix::identity(config.size()); }

RegularityResult is_regular(const ExtClass& alpha) {
  const auto& v = alpha.values();
  for (std::size_t z = 0; z < v.size(); ++z)
    if (sgn(v[z]) == 0)
      return {false, z};
  return {};
}

Rational LinearForm::evaluate(std::span<const Rational> c) const { return dot(coeffs, c); }

std::vector<LinearForm> theta_polynomial(const ExtSpace& ext) {
  std::vector<LinearForm> forms;
  for (std::size_t z = 0; z < ext.config().size(); ++z)
    forms.push_back({ext.basis().column(z)});
  return forms;
}

Rational evaluate_theta(const std::vector<LinearForm>& forms, std::span<const Rational> c) {
  Rational product = 1;
  for (const auto& f : forms)
    product *= f.evaluate(c);
  return product;
}

namespace {

void require_distinct(const Vector& params) {
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (params[i] == params[j])
        throw DuplicateParams("parameter " + to_string(params[i]) + " repeats");
}

Configuration labels_or_numbered(std::vector<std::string> labels, std::size_t d) {
  if (labels.empty())
    return Configuration::numbered(d);
  if (labels.size() != d)
    throw DimensionMismatch("label count differs from parameter count");
  return Configuration(std::move(labels));
}

// Uniform enough for test data and, unlike std::uniform_int_distribution,
// identical on every standard library.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

constexpr int max_draws = 256;

}  // namespace

AnalysisInput generate_power(const Vector& params, std::vector<std::string> labels) {
  if (params.size() < 2)
    throw DimensionMismatch("power family needs at least two points");
  require_distinct(params);
  const std::size_t d = params.size();
  Matrix basis(2, d);
  for (std::size_t z = 0; z < d; ++z) {
    basis(0, z) = 1;
    basis(1, z) = params[z];
  }
  ExtSpace space(labels_or_numbered(std::move(labels), d), std::move(basis));
  ExtClass alpha(space, {Rational(1), Rational(0)});
  return {std::move(space), std::move(alpha), Metadata{std::nullopt, std::nullopt, "power"}};
}

AnalysisInput generate_ci_line(const Vector& params, int n, std::vector<std::string> labels) {
  if (n < 1)
    throw SchemaError("codimension n must be positive");
  auto input = generate_power(params, std::move(labels));
  input.metadata = Metadata{n, n + 2, "ci-line"};
  return input;
}

AnalysisInput generate_random(std::size_t d, std::size_t delta, std::uint64_t seed) {
  if (delta < 1 || delta > d)
    throw DimensionMismatch("need 1 <= delta <= d");
  std::mt19937_64 rng(seed);
  std::optional<Matrix> basis;
  for (int attempt = 0; attempt < max_draws && !basis; ++attempt) {
    Matrix m(delta, d);
    for (std::size_t r = 0; r < delta; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        const auto num = draw(rng, -9, 9);
        const auto den = draw(rng, 1, 3);
        Rational x{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
        x.canonicalize();
        m(r, c) = x;
      }
    // A zero column would make every class vanish at that point.
    bool covers = true;
    for (std::size_t c = 0; c < d && covers; ++c)
      covers = !is_zero(m.column(c));
    if (covers && rref(m).rank == delta)
      basis = std::move(m);
  }
  if (!basis)
    throw RetriesExhausted("no full-rank extension basis drawn");

  ExtSpace space(Configuration::numbered(d), std::move(*basis));
  for (int attempt = 0; attempt < max_draws; ++attempt) {
    Vector coeffs(delta);
    for (auto& c : coeffs)
      c = static_cast<long>(draw(rng, -10, 10));
    ExtClass alpha(space, std::move(coeffs));
    if (is_regular(alpha))
      return {std::move(space), std::move(alpha), Metadata{std::nullopt, std::nullopt, "random"}};
  }
  throw RetriesExhausted("no regular class found in " + std::to_string(max_draws) + " draws");
}

}  // namespace najc
