#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace kfib {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Accepts "p/q" and plain decimal strings ("-3", "0.25", "1.5e-2" is NOT
// accepted); decimals are converted to exact rationals.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

// The exact rational square root, when value is a perfect square of a
// rational (both numerator and denominator are integer squares).
std::optional<Rational> exact_sqrt(const Rational& value);

inline int sign_of(const Rational& value) {
  return value > 0 ? 1 : (value < 0 ? -1 : 0);
}

}  // namespace kfib
