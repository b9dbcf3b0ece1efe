#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace klsc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

bool is_integer(const Rational& r);

/// Largest integer <= r.
BigInt floor_int(const Rational& r);

/// base^exp for integer exp; throws DomainError on 0^negative.
Rational pow_rational(const Rational& base, long exp);

/// Exact conversion of a decimal literal ("1.25", "3e-2", "10") to a
/// base-10 rational. Throws std::invalid_argument on malformed input.
Rational rational_from_decimal(const std::string& text);

/// Exact value of a double (doubles are dyadic rationals).
Rational rational_from_double(double v);

/// "p/q" (or "p" when q == 1).
std::string to_string(const Rational& r);

/// r = p/q in lowest terms with q odd?  Used by real-power evaluation.
bool has_odd_denominator(const Rational& r);

bool numerator_is_odd(const Rational& r);

}  // namespace klsc
