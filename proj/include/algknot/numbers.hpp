#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace algknot {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_fraction_string(const Rat& r);

/// Parses "p" or "p/q" (base 10, optional leading '-'). Throws InvalidInput
/// with MalformedText on anything else, including q = 0.
Rat parse_rational(const std::string& text);

double approx(const Rat& r);

/// Smallest integer >= r.
Int ceil_rat(const Rat& r);

}  // namespace algknot
