// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/rational.hpp"

#include "hyperturan/error.hpp"

#include <charconv>

namespace hyperturan {

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw FormatError("empty integer");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw FormatError("malformed integer: " + std::string(text));
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw FormatError("malformed integer: " + std::string(text));
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(text.substr(0, slash));
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw FormatError("zero denominator: " + std::string(text));
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    const bool negative = !whole.empty() && whole.front() == '-';
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const BigInt w = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0) : parse_integer(whole);
    const BigInt f = frac.empty() ? BigInt(0) : parse_integer(frac);
    BigInt num = (w < 0 ? BigInt(-w) : w) * scale + f;
    if (negative) num = -num;
    return Rational(num, scale);
  }
  return Rational(parse_integer(text));
}

Rational pow_int(const Rational& base, long long exponent) {
  if (exponent < 0) {
    if (base == 0) throw ParameterError("zero to a negative power");
    return pow_int(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  auto e = static_cast<unsigned long long>(exponent);
  while (e > 0) {
    if (e & 1ULL) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

BigInt floor(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quotient = num / den;
  if (num % den != 0 && num < 0) quotient -= 1;
  return quotient;
}

BigInt ceil(const Rational& q) {
  const BigInt f = floor(q);
  return f == q ? f : BigInt(f + 1);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

}  // namespace hyperturan
