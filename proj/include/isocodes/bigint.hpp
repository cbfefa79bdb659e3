#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace isocodes {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer pow2(unsigned e);

/// Always "p/q", q > 0, in lowest terms.
std::string to_fraction_string(const Rational& r);
/// Accepts "p/q" or "p".
Rational parse_fraction(const std::string& s);

}  // namespace isocodes
