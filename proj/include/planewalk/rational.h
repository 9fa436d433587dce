#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace planewalk {

// All coordinate arithmetic is exact.  cpp_rational keeps values in
// canonical reduced form (gcd 1, positive denominator) by construction.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", plain integers, and decimal strings ("-3", "0.25", "7.5e2"
// is NOT accepted; no exponents).  Throws Error(SyntaxError) on anything else.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

// Largest rational of the form k/q (k integer) with (k/q)^2 <= p/q... more
// precisely: floor(sqrt(p*q))/q for r = p/q >= 0.  This is a lower bound for
// sqrt(r) and is exact whenever r is the square of a rational.
Rational sqrt_lower_bound(const Rational& r);

}  // namespace planewalk
