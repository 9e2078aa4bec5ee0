#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qlogic {

/// Arbitrary-precision rational; every probability and function value in the
/// library is one of these. No floating point is used for any verdict.
using Rational = mpq_class;

/// Canonical "p/q" rendering (always with a denominator, e.g. "0/1", "1/1").
std::string to_fraction_string(const Rational &value);

/// Accepts "p/q" or an integer literal. Throws Error(Kind::Malformed).
Rational parse_fraction(std::string_view text);

/// Lexicographic comparison of rational vectors.
bool lex_less(const std::vector<Rational> &a, const std::vector<Rational> &b);

}  // namespace qlogic
