// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "najc/albanese.hpp"
#include "najc/cyclemap.hpp"
#include "najc/errors.hpp"
#include "najc/higgs.hpp"
#include "najc/report.hpp"

#include "cli_runner.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace najc;

namespace {

// Wall-clock budgets in seconds; criteria without a budget use nullopt.
constexpr double budget_ci_numbers = 0.1;
constexpr double budget_power_scaling = 1.0;
constexpr double budget_relations = 10.0;
constexpr double budget_albanese = 1.0;

// Digits compared between the rendered exp and the oracle.
constexpr int render_digits = 12;


#define EXPECT(cond, msg)                 \
  do {                                    \
    if (!(cond)) {                        \
      std::ostringstream os_;             \
      os_ << msg;                         \
      return os_.str();                   \
    }                                     \
  } while (0)

using Criterion = std::function<std::string()>;

Vector range_params(int d) {
  Vector p;
  for (int i = 0; i < d; ++i)
    p.push_back(i);
  return p;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  return os.str();
}

std::string ci_numbers() {
  const int n = 2;
  const auto in = generate_ci_line(Vector{0, 1, 2, 3}, n);
  const auto data = analyze_hodge(in);
  const auto& dec = data.decomposition;
  EXPECT(in.ext.delta() == 2, "delta " << in.ext.delta());
  EXPECT(static_cast<int>(in.ext.delta()) == *in.metadata.h0L - n, "delta != h0L - n");
  EXPECT(static_cast<int>(data.filtration.weight) == n + 1, "weight " << data.filtration.weight);
  EXPECT(in.metadata.weight_bound() == static_cast<int>(data.filtration.weight), "weight bound mismatch");
  EXPECT(dec.ranks() == (std::vector<std::size_t>{2, 1, 1, 0}), "ranks " << join(dec.ranks()));
  EXPECT(dec.rank(dec.weight() - 1) == 1, "top nonzero rank " << dec.rank(dec.weight() - 1));
  return {};
}

// All degree-k products of h1 basis vectors, as rows.
std::vector<Vector> monomials(const std::vector<Vector>& basis, std::size_t k) {
  std::vector<Vector> out;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Vector m(basis.front().size(), Rational(1));
    for (auto i : idx)
      for (std::size_t j = 0; j < m.size(); ++j)
        m[j] *= basis[i][j];
    out.push_back(m);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == basis.size() - 1)
      --pos;
    if (pos == 0)
      return out;
    const std::size_t next = idx[pos - 1] + 1;
    for (std::size_t j = pos - 1; j < k; ++j)
      idx[j] = next;
  }
}

std::string power_scaling() {
  for (int d = 3; d <= 8; ++d) {
    const Vector params = range_params(d);
    const auto in = generate_power(params);
    const Subspace h1 = h_tilde_one(in.ext, in.alpha);
    const Filtration f = build_filtration(h1);
    std::vector<std::size_t> expected;
    for (int k = 2; k <= d; ++k)
      expected.push_back(k);
    EXPECT(f.weight == static_cast<std::size_t>(d - 1), "d=" << d << " weight " << f.weight);
    EXPECT(f.hilbert == expected, "d=" << d << " hilbert " << join(f.hilbert));
    for (std::size_t k = 1; k <= f.weight; ++k)
      EXPECT(f.hilbert[k - 1] == oracle::vandermonde_rank(params, k), "d=" << d << " Vandermonde k=" << k);
    if (d > 6)
      continue;
    const auto basis = h1.basis().row_vectors();
    for (std::size_t k = 1; k <= f.weight + 1; ++k) {
      auto rows = monomials(basis, k);
      const std::size_t r = oracle::rank(rows);
      const std::size_t level = std::min(k, f.weight);
      EXPECT(r == f.hilbert[level - 1], "d=" << d << " brute force rank " << r << " at k=" << k);
      for (const auto& b : f.step(level).basis().row_vectors())
        rows.push_back(b);
      EXPECT(oracle::rank(rows) == r, "d=" << d << " step " << level << " outside monomial span");
    }
  }
  return {};
}

std::string relations_suite() {
  std::mt19937_64 rng(20240601);
  std::size_t polarizing = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 2 + rng() % 7;
    const std::size_t delta = 1 + rng() % std::min<std::size_t>(d, 4);
    const std::uint64_t seed = rng();
    const auto in = generate_random(d, delta, seed);
    const HodgeData data = analyze_hodge(in);
    if (!is_polarizing(data.filtration, trace_gram(in.config())))
      continue;
    ++polarizing;
    const Decomposition& dec = data.decomposition;
    try {
      const auto report = verify_relations(dec);
      EXPECT(report.higgs_ok, "case " << i << " relations not ok");
      const std::size_t r = dec.rank(0);
      EXPECT(report.checked_pairs == r * r, "case " << i << " checked " << report.checked_pairs);
      for (const auto& t : dec.h0().basis().row_vectors()) {
        const GradedOperator op = mult_operator(dec, t, BandCheck::skip);
        EXPECT(op.is_tridiagonal(), "case " << i << " not block tridiagonal");
      }
    } catch (const Error& e) {
      EXPECT(false, "case " << i << " (d=" << d << ", delta=" << delta << "): " << e.what());
    }
  }
  EXPECT(polarizing == 200, "only " << polarizing << " polarizing cases");
  return {};
}

std::string higgs_hat() {
  const std::vector<Vector> families{Vector{0, 1, 2}, Vector{0, 1, 2, 3}, range_params(5)};
  std::mt19937_64 rng(77);
  for (const auto& params : families) {
    const Decomposition dec = analyze_hodge(generate_power(params)).decomposition;
    const std::size_t w = dec.weight();
    const AlbaneseModel model(w);
    for (int draw = 0; draw < 100; ++draw) {
      Rational s = 0;
      while (s == 0)
        s = oracle::small_rational(rng);
      Vector lambdas(w - 1);
      for (auto& l : lambdas)
        while (l == 0)
          l = oracle::small_rational(rng);
      const Vector p = torus_point(model, s, lambdas);
      const Vector x(p.begin() + 1, p.begin() + static_cast<long>(w));
      const Vector y(p.begin() + static_cast<long>(w), p.end());
      EXPECT(is_zero(quadric_residuals(model, p)), "w=" << w << " torus point off the quadrics");
      EXPECT(higgs_family_check(dec, p[0], x, y), "w=" << w << " draw " << draw);
    }
  }
  return {};
}

std::string albanese_numerics() {
  for (std::size_t w = 2; w <= 10; ++w) {
    EXPECT(degree_via_volume(w) == (std::int64_t{1} << (w - 1)), "w=" << w << " degree " << degree_via_volume(w));
    const FanoReport r = fano_check(w);
    EXPECT(r.dimension == w - 1, "w=" << w << " dimension " << r.dimension);
    EXPECT(r.interior_points == 1, "w=" << w << " interior points " << r.interior_points);
    EXPECT(r.dual_integral, "w=" << w << " dual not integral");
  }
  return {};
}

std::string theta_sweep() {
  const auto in = generate_power(Vector{0, 1, 2, 3});
  const auto forms = theta_polynomial(in.ext);
  EXPECT(forms.size() == in.config().size(), "form count " << forms.size());
  std::size_t checked = 0;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const Vector c{a, b};
      const bool vanishes = evaluate_theta(forms, c) == 0;
      EXPECT(vanishes == !is_regular(ExtClass(in.ext, c)).regular, "mismatch at (" << a << "," << b << ")");
      ++checked;
    }
  EXPECT(checked == 49, "checked " << checked);
  return {};
}

std::string cycle_shape() {
  const auto in = generate_power(Vector{0, 1, 2, 3});
  const auto cycle_of = [](const AnalysisInput& x) {
    return cycle_map(analyze_hodge(x).decomposition, x.config());
  };
  const CycleDivisor div = cycle_of(in);
  EXPECT(div.sections.size() == in.config().size(), "sections " << div.sections.size());
  const std::string base = dump(cycle_fragment(div, render_digits));
  EXPECT(dump(cycle_fragment(cycle_of(in.with_scaled_alpha(5)), render_digits)) == base,
         "output changed under alpha -> 5 alpha");

  const std::vector<std::size_t> order{2, 0, 3, 1};
  const CycleDivisor perm = cycle_of(in.permuted(order));
  for (std::size_t i = 0; i < order.size(); ++i)
    EXPECT(perm.sections[i] == div.sections[order[i]], "relabeling: section " << i);

  EXPECT(div.sections[0].point == "z1", "first section " << div.sections[0].point);
  EXPECT(div.sections[0].e_X == (Vector{ratio(7, 10), ratio(9, 100)}), "e_X(z1) " << join(to_strings(div.sections[0].e_X)));

  const auto rendered = render_float(div, render_digits);
  for (std::size_t i = 0; i < div.sections.size(); ++i) {
    const auto& s = div.sections[i];
    const auto& r = rendered[i];
    const auto want = [](const Rational& e) {
      return oracle::round_significant(oracle::exp_taylor(e), render_digits);
    };
    EXPECT(r.t == want(s.e_T), s.point << " T " << r.t);
    for (std::size_t p = 0; p < s.e_X.size(); ++p) {
      EXPECT(r.x[p] == want(s.e_X[p]), s.point << " X" << p << " " << r.x[p]);
      EXPECT(r.y[p] == want(s.e_Y[p]), s.point << " Y" << p << " " << r.y[p]);
    }
  }
  return {};
}

std::string negative_controls() {
  const auto dir = std::filesystem::temp_directory_path();
  const auto golden = generate_power(Vector{0, 1, 2, 3});
  const AnalysisInput bad{golden.ext, ExtClass(golden.ext, Vector{1, -1}), golden.metadata};
  const auto path = dir / "acceptance_nonregular.json";
  write_json_file(path, input_to_json(bad));
  const CliResult r = run_cli("analyze " + path.string());
  EXPECT(r.code == 2, "non-regular exit code " << r.code);
  EXPECT(r.err.find("z2") != std::string::npos, "witness missing from: " << r.err);

  Filtration f;
  f.steps = {span(std::vector<Vector>{{1, 1, -1, -1}, {1, -1, 1, -1}}, 4)};
  f.hilbert = {2};
  f.weight = 1;
  try {
    decompose(f, Matrix::diagonal(Vector{1, 1, -1, -1}));
    EXPECT(false, "degenerate gram accepted");
  } catch (const NotPolarizing& e) {
    EXPECT(e.level() == 1, "failing level " << e.level());
  }

  const auto random = generate_random(8, 3, 1);
  try {
    verify_relations(inject_fault(analyze_hodge(random).decomposition));
    EXPECT(false, "fault not detected");
  } catch (const RelationViolation& e) {
    EXPECT(!e.relation().empty(), "relation id missing");
  }
  const auto checks = run_verify(random, true);
  bool surfaced = false;
  for (const auto& c : checks)
    surfaced |= c.name == "relations" && c.detail.rfind("RelationViolation", 0) == 0;
  EXPECT(surfaced, "verify did not report RelationViolation");
  return {};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    Criterion run;
    std::optional<double> budget;
  };
  const std::vector<Entry> entries{
      {1, "complete intersection numbers", ci_numbers, budget_ci_numbers},
      {2, "power family scaling law", power_scaling, budget_power_scaling},
      {3, "graded relations on 200 random inputs", relations_suite, budget_relations},
      {4, "deformed Higgs family from torus points", higgs_hat, std::nullopt},
      {5, "Albanese degree and reflexivity", albanese_numerics, budget_albanese},
      {6, "theta divisor matches regularity", theta_sweep, std::nullopt},
      {7, "cycle map shape and equivariance", cycle_shape, std::nullopt},
      {8, "negative controls", negative_controls, std::nullopt},
  };

  int failed = 0;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = e.run();
    } catch (const std::exception& ex) {
      why = std::string("unexpected exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && e.budget && secs > *e.budget) {
      std::ostringstream os;
      os << "took " << secs << " s, budget " << *e.budget << " s";
      why = os.str();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    if (why.empty()) {
      std::cout << "PASS [" << e.id << "] " << e.name << " (" << timing << ")\n";
    } else {
      std::cout << "FAIL [" << e.id << "] " << e.name << " (" << timing << "): " << why << "\n";
      ++failed;
    }
  }
  std::cout << (8 - failed) << "/8 criteria passed\n";
  return failed;
}
