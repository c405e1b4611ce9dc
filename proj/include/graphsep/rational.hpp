#ifndef GRAPHSEP_RATIONAL_HPP
#define GRAPHSEP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace graphsep {

// Exact rational arithmetic. cpp_rational keeps values canonical:
// lowest terms, denominator > 0.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Formats as "num/den", always with an explicit denominator ("0/1", "3/1").
std::string rat_to_string(const Rational& r);

/// Parses "num" or "num/den". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational rat_from_string(std::string_view text);

/// -1, 0 or +1.
int sign(const Rational& r);

} // namespace graphsep

#endif
