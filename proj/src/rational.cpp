#include "schubstab/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>

namespace schubstab {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw ValidationError("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ValidationError("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    BigInt den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(whole) + "'");
    result = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw ValidationError("malformed rational '" + std::string(whole) + "'");
    }
    BigInt ip = int_part.empty() ? BigInt(0) : parse_integer(int_part, whole);
    BigInt fp = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, whole);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    result = Rational(ip * scale + fp, scale);
  } else {
    result = Rational(parse_integer(text, whole));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

long double to_long_double(const Rational& q) {
  // Scale so the quotient keeps a full long double mantissa even for huge terms.
  const BigInt& num = numerator(q);
  const BigInt& den = denominator(q);
  if (num == 0) return 0.0L;
  long shift = static_cast<long>(boost::multiprecision::msb(den)) -
               static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(num))) + 80;
  BigInt scaled = shift > 0 ? BigInt(num << shift) : num;
  BigInt quotient = scaled / den;
  long double value = quotient.convert_to<long double>();
  return shift > 0 ? std::ldexp(value, static_cast<int>(-shift)) : value;
}

bool exact_sqrt(const BigInt& value, BigInt& root) {
  if (value < 0) return false;
  BigInt r = boost::multiprecision::sqrt(value);
  if (r * r != value) return false;
  root = r;
  return true;
}

bool exact_sqrt(const Rational& value, Rational& root) {
  BigInt rn, rd;
  if (!exact_sqrt(numerator(value), rn) || !exact_sqrt(denominator(value), rd)) return false;
  root = Rational(rn, rd);
  return true;
}

std::string format_decimal(long double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
  return buf;
}

BigInt gcd_of(const std::vector<BigInt>& values) {
  BigInt g = 0;
  for (const auto& v : values) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v));
  return g;
}

}  // namespace schubstab
