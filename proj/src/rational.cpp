#include "najc/rational.hpp"

#include "najc/errors.hpp"

#include <algorithm>
#include <cctype>

namespace najc {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

void require_same_size(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw DimensionMismatch("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
}

}  // namespace

Rational ratio(long num, long den) {
  if (den == 0)
    throw ParseError("zero denominator");
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-')
    body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw ParseError("malformed rational '" + std::string(text) + "'");

  mpz_class n(std::string(num), 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0)
      throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (text.front() == '-')
    n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1)
    return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Vector parse_vector(std::span<const std::string> texts) {
  Vector out;
  out.reserve(texts.size());
  for (const auto& t : texts)
    out.push_back(parse_rational(t));
  return out;
}

std::vector<std::string> to_strings(std::span<const Rational> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values)
    out.push_back(to_string(v));
  return out;
}

Vector ones(std::size_t n) { return Vector(n, Rational(1)); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n, Rational(0));
  v.at(index) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector hadamard(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_size(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] * b[i];
  return out;
}

Vector scaled(std::span<const Rational> v, const Rational& c) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i] * c;
  return out;
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_size(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

Vector subtract(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_size(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_size(a, b);
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += a[i] * b[i];
  return acc;
}

}  // namespace najc
