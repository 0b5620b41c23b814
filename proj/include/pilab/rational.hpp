#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace pilab {

/// Exact rational number; GMP keeps it in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p", "-p", "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text, std::size_t line = 0);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

std::string to_string(const Vector& v);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

bool is_zero(const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

/// y += c * x
void axpy(Vector& y, const Rational& c, const Vector& x);

}  // namespace pilab
