#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace fgc {

// Exact rational arithmetic for all weights, scaled weights and LP pivots.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p", "-p" or "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

// Prints "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

// Decimal rendering with the given number of significant digits (bound outputs).
std::string format_decimal(double value, int significant_digits = 6);

inline double to_double(const Rational& value) {
    return static_cast<double>(value);
}

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fgc
