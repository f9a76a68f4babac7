#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace najc {

// Exact rationals. mpq_class keeps values canonical (denominator > 0, reduced)
// after every arithmetic operation.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// num / den in lowest terms; den must be nonzero.
Rational ratio(long num, long den);

/// Parses "p", "-p", "p/q" or "-p/q". Throws ParseError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

Vector parse_vector(std::span<const std::string> texts);
std::vector<std::string> to_strings(std::span<const Rational> values);

Vector ones(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);

bool is_zero(std::span<const Rational> v);

/// Componentwise product; the multiplication of the function ring Q^d.
Vector hadamard(std::span<const Rational> a, std::span<const Rational> b);

Vector scaled(std::span<const Rational> v, const Rational& c);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector subtract(std::span<const Rational> a, std::span<const Rational> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace najc
