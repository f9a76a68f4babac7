#include "najc/report.hpp"

#include "najc/errors.hpp"
#include "najc/higgs.hpp"

#include <exception>
#include <map>
#include <random>

namespace najc {

Json hodge_fragment(const AnalysisInput& input, const HodgeData& hodge) {
  Json j;
  j["delta"] = input.ext.delta();
  j["weight"] = hodge.filtration.weight;
  j["hilbert"] = hodge.filtration.hilbert;
  j["ranks"] = hodge.decomposition.ranks();
  j["polarizing"] = true;
  j["kappa_degree"] = kappa_fibers(hodge.h1, input.config()).degree;
  j["adapted_basis"] = to_json(hodge.decomposition.adapted_basis);
  return j;
}

namespace {

Json band_blocks(const GradedOperator& op, int shift) {
  Json blocks = Json::array();
  for (std::size_t p = 0; p < op.weight(); ++p) {
    const long q = static_cast<long>(p) + shift;
    if (q < 0 || q >= static_cast<long>(op.weight()))
      continue;
    Json b;
    b["from"] = p;
    b["to"] = q;
    b["matrix"] = to_json(op.block(p, static_cast<std::size_t>(q)));
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace

Json operator_fragment(const Decomposition& dec) {
  const OperatorFrame frame(dec);
  Json multipliers = Json::array();
  for (std::size_t i = 0; i < dec.h0().rank(); ++i) {
    const auto op = mult_operator(dec, frame, dec.h0().basis().row(i));
    Json m;
    m["index"] = i;
    m["t"] = to_json(op.t);
    m["minus"] = band_blocks(op, -1);
    m["zero"] = band_blocks(op, 0);
    m["plus"] = band_blocks(op, 1);
    multipliers.push_back(std::move(m));
  }
  const auto rel = verify_relations(dec);
  Json j;
  j["multipliers"] = std::move(multipliers);
  j["relations"] = {{"higgs_ok", rel.higgs_ok}, {"checked_pairs", rel.checked_pairs}};
  return j;
}

Json cycle_fragment(const CycleDivisor& divisor, std::optional<int> digits) {
  Json sections = Json::array();
  for (const auto& s : divisor.sections)
    sections.push_back({{"point", s.point},
                        {"e_T", to_string(s.e_T)},
                        {"e_X", to_json(s.e_X)},
                        {"e_Y", to_json(s.e_Y)}});
  Json j;
  j["weight"] = divisor.weight;
  j["sections"] = std::move(sections);
  if (auto cy = divisor.calabi_yau_dimension())
    j["calabi_yau_dimension"] = *cy;
  else
    j["calabi_yau_dimension"] = nullptr;
  if (digits) {
    Json rendered = Json::array();
    for (const auto& r : render_float(divisor, *digits))
      rendered.push_back({{"point", r.point}, {"T", r.t}, {"X", r.x}, {"Y", r.y}});
    j["digits"] = *digits;
    j["rendered"] = std::move(rendered);
  }
  return j;
}

Json albanese_fragment(std::size_t weight) {
  const auto fano = fano_check(weight);
  Json j;
  j["dimension"] = fano.dimension;
  j["degree"] = degree_via_volume(weight);
  j["interior_points"] = fano.interior_points;
  j["reflexive"] = fano.reflexive;
  if (fano.cy_section_dimension)
    j["cy_section_dimension"] = *fano.cy_section_dimension;
  else
    j["cy_section_dimension"] = nullptr;
  return j;
}

Json build_report(const AnalysisInput& input, const AnalyzeOptions& options) {
  const HodgeData hodge = analyze_hodge(input);
  const std::size_t w = hodge.filtration.weight;
  Json diagnostics = Json::array();
  if (input.metadata.sub_generic(input.config().size()))
    diagnostics.push_back("sub-generic: fewer points than h0(L)");

  Json report;
  report["input"] = input_to_json(input);
  report["hodge"] = hodge_fragment(input, hodge);
  report["operators"] = operator_fragment(hodge.decomposition);
  if (options.cycle) {
    if (w >= 2) {
      report["cycle"] = cycle_fragment(cycle_map(hodge.decomposition, input.config()), options.digits);
    } else {
      report["cycle"] = nullptr;
      diagnostics.push_back("cycle map skipped: requires weight >= 2");
    }
    if (w >= 2 && w <= max_albanese_weight) {
      report["albanese"] = albanese_fragment(w);
    } else {
      report["albanese"] = nullptr;
      diagnostics.push_back("albanese skipped: requires 2 <= weight <= " +
                            std::to_string(max_albanese_weight));
    }
  }
  report["diagnostics"] = std::move(diagnostics);
  return report;
}

namespace {

SweepSample evaluate_sample(const AnalysisInput& input, const Matrix& gram, Vector coeffs) {
  SweepSample s;
  ExtClass alpha(input.ext, coeffs);
  s.coeffs = std::move(coeffs);
  s.regular = static_cast<bool>(is_regular(alpha));
  if (!s.regular)
    return s;
  const Filtration f = build_filtration(h_tilde_one(input.ext, alpha));
  s.weight = f.weight;
  s.polarizing = static_cast<bool>(is_polarizing(f, gram));
  if (s.polarizing)
    s.ranks = decompose(f, gram).ranks();
  return s;
}

}  // namespace

SweepResult sweep(const AnalysisInput& input, std::size_t samples, std::uint64_t seed,
                  std::int64_t box, Backend backend) {
  if (samples < 1)
    throw DimensionMismatch("sweep needs at least one sample");
  if (box < 0)
    throw DimensionMismatch("box half-width must be non-negative");
  std::mt19937_64 rng(seed);
  const auto width = static_cast<std::uint64_t>(2 * box + 1);
  std::vector<Vector> draws(samples, Vector(input.ext.delta()));
  for (auto& coeffs : draws)
    for (auto& c : coeffs)
      c = static_cast<long>(static_cast<std::int64_t>(rng() % width) - box);

  const Matrix gram = trace_gram(input.config());
  SweepResult result;
  result.seed = seed;
  result.box = box;
  result.samples.resize(samples);
  std::vector<std::exception_ptr> errors(samples);
  const bool parallel =
    backend == Backend::parallel || (backend == Backend::automatic && max_threads() > 1);
  const auto n = static_cast<long>(samples);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n; ++i) {
    try {
      result.samples[i] = evaluate_sample(input, gram, draws[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);

  std::map<std::size_t, std::size_t> histogram;
  std::size_t polarizing = 0;
  for (const auto& s : result.samples) {
    if (s.weight)
      ++histogram[*s.weight];
    polarizing += s.polarizing ? 1 : 0;
  }
  std::size_t best = 0;
  for (const auto& [w, count] : histogram)
    if (count > best) {
      best = count;
      result.generic_weight = w;
    }
  result.polarizing_fraction = static_cast<double>(polarizing) / static_cast<double>(samples);
  return result;
}

Json to_json(const SweepResult& result) {
  Json samples = Json::array();
  for (const auto& s : result.samples) {
    Json j;
    j["alpha_coeffs"] = to_json(s.coeffs);
    j["regular"] = s.regular;
    j["polarizing"] = s.polarizing;
    if (s.weight)
      j["weight"] = *s.weight;
    else
      j["weight"] = nullptr;
    j["ranks"] = s.ranks;
    samples.push_back(std::move(j));
  }
  Json j;
  j["seed"] = result.seed;
  j["box"] = result.box;
  j["samples"] = result.samples.size();
  j["per_sample"] = std::move(samples);
  Json agg;
  if (result.generic_weight)
    agg["generic_weight"] = *result.generic_weight;
  else
    agg["generic_weight"] = nullptr;
  agg["polarizing_fraction"] = result.polarizing_fraction;
  j["aggregate"] = std::move(agg);
  return j;
}

}  // namespace najc
