// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hyperturan {

/// Exact arbitrary-precision rational. All exponents, densities and
/// balancedness bounds are carried in this type.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

/// "p/q" or "p" (q == 1). Stable across platforms.
std::string to_string(const Rational& q);

/// Parses "p", "p/q", or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

Rational pow_int(const Rational& base, long long exponent);

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

double to_double(const Rational& q);

BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace hyperturan
