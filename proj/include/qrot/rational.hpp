#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace qrot {

using Integer = boost::multiprecision::cpp_int;

// Exact scalar used everywhere: always kept in lowest terms with positive
// denominator (cpp_rational maintains the normal form).
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

// "p/q" in lowest terms, positive denominator, integers as "p/1".
std::string to_fraction_string(const Rational& r);

// "p/q", but bare "p" for integers.
std::string to_plain_string(const Rational& r);

// Accepts "p", "p/q", optional leading '-'.
Rational parse_rational(const std::string& s);

}  // namespace qrot
