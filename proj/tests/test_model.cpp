#include "najc/errors.hpp"
#include "najc/model.hpp"
#include "najc/subspace.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace najc;

namespace {

const Matrix power4{{1, 1, 1, 1}, {0, 1, 2, 3}};

ExtSpace power_space() { return ExtSpace(Configuration::numbered(4), power4); }

}  // namespace

TEST_CASE("configuration labels") {
  const Configuration c = Configuration::numbered(3);
  CHECK(c.labels() == std::vector<std::string>{"z1", "z2", "z3"});
  CHECK(c.index_of("z2") == 1);
  CHECK_THROWS_AS(c.index_of("z9"), UnknownLabel);
  CHECK_THROWS_AS(Configuration({"a", "a"}), SchemaError);
  CHECK_THROWS_AS(Configuration(std::vector<std::string>{}), SchemaError);
}

TEST_CASE("ext space invariants") {
  CHECK_NOTHROW(power_space());
  CHECK_THROWS_AS(ExtSpace(Configuration::numbered(3), power4), DimensionMismatch);
  CHECK_THROWS(ExtSpace(Configuration::numbered(4), Matrix{{1, 1, 1, 1}, {2, 2, 2, 2}}));
  CHECK_THROWS(ExtSpace(Configuration::numbered(4), Matrix(0, 4)));
  const ExtClass alpha(power_space(), Vector{1, -1});
  CHECK(alpha.values() == Vector{1, 0, -1, -2});
  CHECK_THROWS_AS(ExtClass(power_space(), Vector{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("trace gram") {
  CHECK(trace_gram(Configuration::numbered(1)) == Matrix{{1}});
  const Matrix g = trace_gram(Configuration::numbered(4));
  CHECK(g == Matrix::identity(4));
  CHECK(pairing(ones(4), g, Vector{0, 1, 2, 3}) == 6);
}

TEST_CASE("regularity") {
  const ExtSpace full(Configuration::numbered(4), Matrix::identity(4));
  CHECK(is_regular(ExtClass(full, Vector{1, 1, 1, 1})).regular);
  const auto r = is_regular(ExtClass(full, Vector{1, 0, 2, 3}));
  CHECK_FALSE(r.regular);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == 1);
  const auto s = is_regular(ExtClass(power_space(), Vector{1, -1}));
  CHECK_FALSE(s.regular);
  CHECK(*s.witness == 1);
}

TEST_CASE("theta forms") {
  const auto forms = theta_polynomial(power_space());
  REQUIRE(forms.size() == 4);
  CHECK(forms[0].coeffs == Vector{1, 0});
  CHECK(forms[3].coeffs == Vector{1, 3});
  CHECK(evaluate_theta(forms, Vector{1, 1}) == 24);

  const auto doubled = theta_polynomial(ExtSpace(Configuration::numbered(2), Matrix{{1, 1}}));
  REQUIRE(doubled.size() == 2);
  CHECK(doubled[0].coeffs == doubled[1].coeffs);
  CHECK(evaluate_theta(doubled, Vector{3}) == 9);
}

TEST_CASE("property: theta vanishes exactly off the regular locus") {
  const ExtSpace ext = power_space();
  const auto forms = theta_polynomial(ext);
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      const Vector c{a, b};
      const ExtClass alpha(ext, c);
      CHECK((evaluate_theta(forms, c) != 0) == is_regular(alpha).regular);
      for (int k : {-3, 2, 5})
        CHECK(is_regular(ExtClass(ext, scaled(c, k))).regular == is_regular(alpha).regular);
    }
}

TEST_CASE("power generator") {
  const auto two = generate_power(Vector{0, 1});
  CHECK(two.ext.basis() == Matrix{{1, 1}, {0, 1}});
  CHECK(two.alpha.coeffs() == Vector{1, 0});

  const auto four = generate_power(Vector{0, 1, 2, 3});
  CHECK(four.ext.basis() == power4);
  CHECK(four.ext.delta() == 2);
  CHECK(four.alpha.values() == ones(4));
  CHECK_THROWS_AS(generate_power(Vector{0, 1, 1}), DuplicateParams);

  const auto labeled = generate_power(Vector{0, 1, 2}, {"a", "b", "c"});
  CHECK(labeled.config().labels() == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("complete intersection line surrogate") {
  const auto ci = generate_ci_line(Vector{0, 1, 2, 3}, 2);
  CHECK(ci.ext == generate_power(Vector{0, 1, 2, 3}).ext);
  CHECK(ci.metadata.n == 2);
  CHECK(ci.metadata.h0L == 4);
  CHECK(*ci.metadata.h0L - *ci.metadata.n == static_cast<int>(ci.ext.delta()));

  const auto small = generate_ci_line(Vector{0, 1}, 2);
  CHECK(small.metadata.sub_generic(small.config().size()));
  CHECK_FALSE(ci.metadata.sub_generic(ci.config().size()));

  const auto three = generate_ci_line(Vector{0, 1, 2, 3, 4}, 3);
  CHECK(three.ext.delta() == 2);
  CHECK(three.metadata.weight_bound() == 4);
  CHECK_THROWS_AS(generate_ci_line(Vector{2, 2}, 2), DuplicateParams);
}

TEST_CASE("random generator") {
  CHECK(generate_random(4, 2, 42) == generate_random(4, 2, 42));
  CHECK_FALSE(generate_random(4, 2, 42) == generate_random(4, 2, 43));

  const auto full = generate_random(3, 3, 7);
  CHECK(Subspace::from_rows(full.ext.basis()) == Subspace::whole(3));
  CHECK(is_regular(full.alpha).regular);

  CHECK(Subspace::from_rows(generate_random(5, 2, 1).ext.basis()).rank() == 2);
  CHECK_THROWS(generate_random(3, 4, 1));
  CHECK_THROWS(generate_random(3, 0, 1));
}

TEST_CASE("property: generated inputs satisfy their invariants") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t d = 1 + seed % 7;
    const std::size_t delta = 1 + rng() % d;
    const auto in = generate_random(d, delta, seed);
    CHECK(Subspace::from_rows(in.ext.basis()).rank() == delta);
    CHECK(is_regular(in.alpha).regular);
    Vector values(d);
    for (std::size_t i = 0; i < delta; ++i)
      values = add(values, scaled(in.ext.basis().row(i), in.alpha.coeffs()[i]));
    CHECK(values == in.alpha.values());
  }
  for (int trial = 0; trial < 20; ++trial) {
    Vector params;
    for (int i = 0; i < 2 + trial % 5; ++i)
      params.push_back(Rational(i * 3) + oracle::small_rational(rng) / 7);
    const auto in = generate_power(params);
    CHECK(Subspace::from_rows(in.ext.basis()).rank() == 2);
    CHECK(is_regular(in.alpha).regular);
  }
}

TEST_CASE("input transformations") {
  const auto in = generate_power(Vector{0, 1, 2, 3});
  CHECK(in.with_scaled_alpha(5).alpha.coeffs() == Vector{5, 0});
  const auto rev = in.permuted({3, 2, 1, 0});
  CHECK(rev.config().labels() == std::vector<std::string>{"z4", "z3", "z2", "z1"});
  CHECK(rev.ext.basis().row_vector(1) == Vector{3, 2, 1, 0});
}
