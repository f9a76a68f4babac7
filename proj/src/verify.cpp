#include "najc/errors.hpp"
#include "najc/higgs.hpp"
#include "najc/reference.hpp"
#include "najc/report.hpp"
#include "najc/strings.hpp"

#include <functional>
#include <numeric>
#include <optional>

namespace najc {

Decomposition inject_fault(Decomposition dec) {
  const auto& off = dec.block_offsets;
  const std::size_t w = dec.weight();
  if (w < 2 || dec.rank(1) == 0)
    return dec;
  for (std::size_t k = 0; k < dec.ambient_dim(); ++k)
    dec.adapted_basis(off[1], k) += dec.adapted_basis(off[0], k);
  return dec;
}

namespace {

using Outcome = std::optional<std::string>;  // failure detail, if any

class Checks {
public:
  void run(const std::string& name, const std::function<Outcome()>& body) {
    CheckResult r{name, CheckStatus::pass, {}};
    try {
      if (auto failure = body()) {
        r.status = CheckStatus::fail;
        r.detail = *failure;
      }
    } catch (const RelationViolation& e) {
      r.status = CheckStatus::fail;
      r.detail = std::string("RelationViolation: ") + e.what();
    } catch (const LeakageError& e) {
      r.status = CheckStatus::fail;
      r.detail = std::string("LeakageError: ") + e.what();
    } catch (const Error& e) {
      r.status = CheckStatus::fail;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }

  void skip(const std::string& name, std::string why) {
    results.push_back({name, CheckStatus::skipped, std::move(why)});
  }

  std::vector<CheckResult> results;
};

Outcome expect(bool ok, const char* what) {
  return ok ? Outcome{} : Outcome{what};
}

Outcome check_decomposition(const Decomposition& dec, const Subspace& h1) {
  const std::size_t d = dec.ambient_dim();
  for (std::size_t p = 0; p < dec.summands.size(); ++p)
    for (std::size_t q = p + 1; q < dec.summands.size(); ++q) {
      const Matrix bp = dec.adapted_basis.row_range(dec.block_offsets[p], dec.block_offsets[p + 1]);
      const Matrix bq = dec.adapted_basis.row_range(dec.block_offsets[q], dec.block_offsets[q + 1]);
      if (!(bp * dec.gram * bq.transpose()).is_zero())
        return "summands H^" + std::to_string(p) + " and H^" + std::to_string(q) +
               " are not orthogonal";
    }
  const auto ranks = dec.ranks();
  if (std::accumulate(ranks.begin(), ranks.end(), std::size_t{0}) != d)
    return "summand ranks do not add up to d";
  if (rref(dec.adapted_basis).rank != d)
    return "adapted basis is not a basis";
  if (!(dec.h0() == h1) || !dec.h0().contains(ones(d)))
    return "H^0 differs from H~_{-1} or misses 1";
  return std::nullopt;
}

Outcome check_graph(std::size_t w) {
  const auto g = build_graph(w);
  for (std::size_t i = 0; i < w; ++i) {
    const auto out = g.outgoing(i);
    if (out.size() != 3 || out[0].color == out[1].color || out[1].color == out[2].color ||
        out[0].color == out[2].color)
      return "upper vertex " + std::to_string(i) + " lacks three distinctly colored edges";
    if (g.incoming(i).size() != 3)
      return "lower vertex " + std::to_string(i) + " does not have three incoming edges";
  }
  return std::nullopt;
}

Outcome check_path(const Decomposition& dec, std::size_t w) {
  const auto g = build_graph(w);
  const Path first = Path::parse("0:+:f", g);
  const Path second = Path::parse(std::to_string(1 % w) + ":0:r", g);
  const Path both = concat(first, second);
  const std::vector<Vector> t{dec.h0().basis().row_vector(dec.h0().rank() - 1)};
  const Matrix composite = path_operator(dec, both, t);
  if (composite != path_operator(dec, second, t) * path_operator(dec, first, t))
    return "path operator is not functorial under concatenation";
  // Only the band shifted by the total effective color may be nonzero.
  GradedOperator probe{t[0], composite, {dec.block_offsets.begin(), dec.block_offsets.end() - 1}};
  for (std::size_t p = 0; p < w; ++p)
    for (std::size_t q = 0; q < w; ++q)
      if (static_cast<long>(q) - static_cast<long>(p) != both.total_shift() &&
          !probe.block(p, q).is_zero())
        return "path operator leaves its predicted band";
  return std::nullopt;
}

Outcome check_cycle(const AnalysisInput& input, const Decomposition& dec) {
  const std::size_t d = input.config().size();
  const std::size_t w = dec.weight();
  const CycleDivisor divisor = cycle_map(dec, input.config());
  if (divisor.sections.size() != d)
    return "divisor does not have d sections";
  if (!(cycle_map(analyze_hodge(input.with_scaled_alpha(5)).decomposition, input.config()) ==
        divisor))
    return "divisor changes under alpha -> 5 alpha";
  std::vector<std::size_t> reversed(d);
  std::iota(reversed.rbegin(), reversed.rend(), 0);
  const AnalysisInput relabeled = input.permuted(reversed);
  const CycleDivisor moved = cycle_map(analyze_hodge(relabeled).decomposition, relabeled.config());
  for (std::size_t i = 0; i < d; ++i)
    if (!(moved.sections[i] == divisor.sections[reversed[i]]))
      return "divisor is not equivariant under relabeling";
  for (const auto& label : input.config().labels()) {
    const Vector d0 = delta_zero(dec, input.config(), label);
    const auto right = right_string(dec, d0);
    const auto left = left_string(dec, d0, right.back());
    for (std::size_t p = 0; p < w; ++p)
      if (!dec.summands[p].contains(right[p]) || !dec.summands[w - 1 - p].contains(left[p]))
        return "moving string leaves its graded summand at point " + label;
  }
  return std::nullopt;
}

Outcome check_albanese(const Decomposition& dec, std::size_t w) {
  if (degree_via_volume(w) != (std::int64_t{1} << (w - 1)))
    return "normalized volume differs from 2^(w-1)";
  const auto fano = fano_check(w);
  if (fano.dimension != w - 1 || fano.interior_points != 1 || !fano.dual_integral)
    return "exponent polytope is not reflexive of dimension w - 1";
  const AlbaneseModel model(w);
  for (long draw = 1; draw <= 4; ++draw) {
    Vector lambdas;
    for (std::size_t p = 0; p + 1 < w; ++p)
      lambdas.push_back(ratio(draw + static_cast<long>(p), 2 + static_cast<long>(p)));
    const Vector pt = torus_point(model, Rational(draw), lambdas);
    if (!is_zero(quadric_residuals(model, pt)))
      return "torus point violates X_p Y_p = T^2";
    const std::span<const Rational> all(pt);
    if (!higgs_family_check(dec, pt[0], all.subspan(1, w - 1), all.subspan(w, w - 1)))
      return "deformed operator from a torus point is not Higgs";
  }
  return std::nullopt;
}

}  // namespace

std::vector<CheckResult> run_verify(const AnalysisInput& input, bool inject) {
  Checks checks;
  const std::size_t d = input.config().size();
  const auto reg = is_regular(input.alpha);
  checks.run("regularity", [&]() -> Outcome {
    if (!reg)
      return "NotRegular: alpha vanishes at " + input.config().label(*reg.witness);
    return std::nullopt;
  });
  if (!reg)
    return checks.results;

  const Subspace h1 = h_tilde_one(input.ext, input.alpha);
  const Filtration f = build_filtration(h1);
  const Matrix gram = trace_gram(input.config());

  if (d <= 6 && input.ext.delta() <= 3) {
    checks.run("filtration_oracle", [&]() -> Outcome {
      const auto ref = reference::symmetric_power_filtration(h1);
      return expect(ref.steps == f.steps, "iterated products disagree with symmetric powers");
    });
  } else {
    checks.skip("filtration_oracle", "brute force limited to d <= 6 and delta <= 3");
  }
  checks.run("hilbert_function", [&]() -> Outcome {
    for (std::size_t k = 1; k < f.hilbert.size(); ++k)
      if (f.hilbert[k] <= f.hilbert[k - 1])
        return "Hilbert function is not strictly increasing";
    return expect(f.hilbert.front() == input.ext.delta(), "P(1) differs from delta");
  });
  checks.run("kappa_degree", [&]() -> Outcome {
    return expect(kappa_fibers(h1, input.config()).degree == f.hilbert.back(),
                  "P(w) differs from the number of kappa fibers");
  });
  checks.run("projective_invariance", [&]() -> Outcome {
    for (const Rational& c : {Rational(-1), Rational(3), ratio(2, 7)})
      if (!(h_tilde_one(input.ext, ExtClass(input.ext, scaled(input.alpha.coeffs(), c))) == h1))
        return "H~_{-1} changes when alpha is rescaled";
    return std::nullopt;
  });

  const auto pol = is_polarizing(f, gram);
  checks.run("polarizing", [&]() -> Outcome {
    if (!pol)
      return "NotPolarizing at level " + std::to_string(*pol.failing_level);
    return std::nullopt;
  });
  if (!pol)
    return checks.results;

  Decomposition dec = decompose(f, gram);
  const std::size_t w = dec.weight();
  if (inject)
    dec = inject_fault(std::move(dec));

  checks.run("decomposition", [&] { return check_decomposition(dec, h1); });
  checks.run("block_tridiagonal", [&]() -> Outcome {
    const OperatorFrame frame(dec);
    for (std::size_t i = 0; i < dec.h0().rank(); ++i)
      mult_operator(dec, frame, dec.h0().basis().row(i));
    return std::nullopt;
  });
  checks.run("relations", [&]() -> Outcome {
    verify_relations(dec);
    return std::nullopt;
  });
  checks.run("operator_linearity", [&]() -> Outcome {
    const OperatorFrame frame(dec);
    const Matrix& h0 = dec.h0().basis();
    const Vector t = h0.row_vector(0);
    const Vector s = h0.row_vector(h0.rows() - 1);
    const auto op_t = mult_operator(dec, frame, t, BandCheck::skip);
    const auto op_s = mult_operator(dec, frame, s, BandCheck::skip);
    const auto combo = mult_operator(dec, frame, add(scaled(t, 3), scaled(s, -2)), BandCheck::skip);
    if (combo.full != Rational(3) * op_t.full + Rational(-2) * op_s.full)
      return "operator is not linear in the multiplier";
    return expect(op_t.full * op_s.full == op_s.full * op_t.full, "multipliers do not commute");
  });
  checks.run("graph_regularity", [&] { return check_graph(w); });
  checks.run("path_functoriality", [&] { return check_path(dec, w); });
  if (w >= 2) {
    checks.run("cycle_map", [&] { return check_cycle(input, dec); });
  } else {
    checks.skip("cycle_map", "requires w >= 2");
  }
  if (w >= 2 && w <= max_albanese_weight) {
    checks.run("albanese", [&] { return check_albanese(dec, w); });
  } else {
    checks.skip("albanese", "requires 2 <= w <= " + std::to_string(max_albanese_weight));
  }
  return checks.results;
}

}  // namespace najc
