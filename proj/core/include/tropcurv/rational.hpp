#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "tropcurv/errors.hpp"

namespace tropcurv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "p", "-p" or "p/q" with integer p, q. Throws InputError.
Rational parse_rational(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string rational_string(const Rational& r);

}  // namespace tropcurv
