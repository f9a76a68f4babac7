#include "najc/cyclemap.hpp"

#include "najc/errors.hpp"

#include <mpfr.h>

#include <exception>

namespace najc {

std::optional<std::size_t> CycleDivisor::calabi_yau_dimension() const {
  if (weight < 3)
    return std::nullopt;
  return weight - 2;
}

Vector delta_zero(const Decomposition& dec, const Configuration& config, const std::string& label) {
  const std::size_t z = config.index_of(label);
  return project(unit_vector(config.size(), z), dec.h0(), dec.gram);
}

namespace {

std::vector<Vector> iterate(const OperatorFrame& frame, const Matrix& step,
                            std::span<const Rational> start, std::size_t count) {
  std::vector<Vector> out;
  Vector coords = frame.coordinates(start);
  out.push_back(frame.function(coords));
  for (std::size_t i = 1; i < count; ++i) {
    coords = step * coords;
    out.push_back(frame.function(coords));
  }
  return out;
}

SectionExponents exponents_at(const Decomposition& dec, const OperatorFrame& frame,
                              const Configuration& config, std::size_t z) {
  const std::size_t w = dec.weight();
  const Vector d0 = project(unit_vector(config.size(), z), dec.h0(), dec.gram);
  const GradedOperator op = mult_operator(dec, frame, d0);
  const auto right = iterate(frame, op.band(1), d0, w);
  const auto left = iterate(frame, op.band(-1), right.back(), w);

  SectionExponents s;
  s.point = config.label(z);
  for (std::size_t p = 0; p + 1 < w; ++p) {
    s.e_X.push_back(right[p][z]);
    // left[m] lies in H^{w-1-m}; y_p reads the element in H^{p+1}.
    s.e_Y.push_back(left[w - 2 - p][z]);
  }
  s.e_T = left[w - 1][z];
  return s;
}

}  // namespace

std::vector<Vector> right_string(const Decomposition& dec, std::span<const Rational> delta0) {
  const OperatorFrame frame(dec);
  const GradedOperator op = mult_operator(dec, frame, delta0);
  return iterate(frame, op.band(1), delta0, dec.weight());
}

std::vector<Vector> left_string(const Decomposition& dec, std::span<const Rational> delta0,
                                std::span<const Rational> top) {
  const OperatorFrame frame(dec);
  const GradedOperator op = mult_operator(dec, frame, delta0);
  return iterate(frame, op.band(-1), top, dec.weight());
}

SectionExponents section_exponents(const Decomposition& dec, const Configuration& config,
                                   const std::string& label) {
  if (dec.weight() < 2)
    throw WeightTooSmall("section exponents need weight >= 2");
  const std::size_t z = config.index_of(label);
  return exponents_at(dec, OperatorFrame(dec), config, z);
}

CycleDivisor cycle_map(const Decomposition& dec, const Configuration& config) {
  if (dec.weight() < 2)
    throw WeightTooSmall("the cycle map needs weight >= 2");
  const OperatorFrame frame(dec);
  CycleDivisor divisor;
  divisor.weight = dec.weight();
  divisor.sections.resize(config.size());
  std::vector<std::exception_ptr> errors(config.size());
  const auto d = static_cast<long>(config.size());
#pragma omp parallel for schedule(dynamic)
  for (long z = 0; z < d; ++z) {
    try {
      divisor.sections[z] = exponents_at(dec, frame, config, static_cast<std::size_t>(z));
    } catch (...) {
      errors[z] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  return divisor;
}

std::string render_exp(const Rational& exponent, int digits) {
  if (digits < 1)
    throw DimensionMismatch("digits must be at least 1");
  mpfr_t x;
  mpfr_init2(x, static_cast<mpfr_prec_t>(digits) * 4 + 96);
  mpfr_set_q(x, exponent.get_mpq_t(), MPFR_RNDN);
  mpfr_exp(x, x, MPFR_RNDN);
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), x, MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  mpfr_clear(x);

  // value = 0.mantissa * 10^exp10, exp(.) > 0 so no sign.
  const long e = exp10;
  const long n = digits;
  if (e > 21 || e < -5) {
    std::string out(1, mantissa[0]);
    if (n > 1)
      out += "." + mantissa.substr(1);
    out += (e - 1 < 0 ? "e-" : "e+") + std::to_string(e - 1 < 0 ? 1 - e : e - 1);
    return out;
  }
  if (e <= 0)
    return "0." + std::string(static_cast<std::size_t>(-e), '0') + mantissa;
  if (e >= n)
    return mantissa + std::string(static_cast<std::size_t>(e - n), '0');
  return mantissa.substr(0, e) + "." + mantissa.substr(e);
}

std::vector<RenderedSection> render_float(const CycleDivisor& divisor, int digits) {
  std::vector<RenderedSection> out;
  for (const auto& s : divisor.sections) {
    RenderedSection r{s.point, render_exp(s.e_T, digits), {}, {}};
    for (const auto& e : s.e_X)
      r.x.push_back(render_exp(e, digits));
    for (const auto& e : s.e_Y)
      r.y.push_back(render_exp(e, digits));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace najc
