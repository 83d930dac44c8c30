#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mtc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rational_pow: 0^negative");
    return 1 / rational_pow(base, -e);
  }
  Rational acc = 1, b = base;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

// Parses "a", "-a" or "a/b".
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  BigInt num(s.substr(0, slash));
  BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  return Rational(num, den);
}

inline std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (long i = 0; i < k; ++i) {
    acc *= n - i;
    acc /= i + 1;
  }
  return acc;
}

inline BigInt double_factorial_odd(long n) {
  // (2n-1)!! with the convention (-1)!! = 1
  BigInt acc = 1;
  for (long k = 1; k <= n; ++k) acc *= 2 * k - 1;
  return acc;
}

}  // namespace mtc
