#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace homleib {

// Exact arithmetic over Q.  cpp_rational keeps values in lowest terms with a
// positive denominator, so equality of values is equality of representations.
using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;
using Vec = std::vector<Scalar>;

// Parses "p", "-p", "p/q" (arbitrary precision).  Throws ParseError
// (kind NonRational) on malformed input or zero denominator.
Scalar parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rational_str(const Scalar& value);

}  // namespace homleib
