#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "grl/errors.hpp"

namespace grl {

using Int = boost::multiprecision::cpp_int;
// cpp_rational keeps values in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Largest integer n with n <= r.
inline Int rat_floor(const Rat& r) {
    Int q = rat_num(r) / rat_den(r);
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

// Parses "p", "-p" or "p/q". Used by the JSON formats, where exact numbers
// travel as strings.
Rat parse_rational(const std::string& text);

std::string format_rational(const Rat& value);

} // namespace grl
