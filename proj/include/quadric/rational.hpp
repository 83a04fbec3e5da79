#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace quadric {

/// Exact fraction in lowest terms with positive denominator.
using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor(const Rational& x) {
    const auto q = x.numerator() / x.denominator();
    return (x.numerator() % x.denominator() != 0 && x.numerator() < 0) ? q - 1 : q;
}

inline std::int64_t ceil(const Rational& x) {
    const auto q = x.numerator() / x.denominator();
    return (x.numerator() % x.denominator() != 0 && x.numerator() > 0) ? q + 1 : q;
}

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

/// Fixed six-digit decimal rendering, rounded half away from zero. Display only.
std::string to_decimal(const Rational& x);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace quadric
