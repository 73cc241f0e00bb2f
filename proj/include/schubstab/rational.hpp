#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schubstab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown for malformed input or violated preconditions (CLI exit code 1).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation fails or a self-check does not hold (CLI exit code 2).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "p/q" or a plain decimal such as "-1.25" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& q);

long double to_long_double(const Rational& q);

/// Returns true and sets `root` when `value` is a perfect square.
bool exact_sqrt(const BigInt& value, BigInt& root);
bool exact_sqrt(const Rational& value, Rational& root);

/// Decimal with `digits` significant digits ("%.*Lg").
std::string format_decimal(long double x, int digits = 12);

BigInt gcd_of(const std::vector<BigInt>& values);

}  // namespace schubstab
