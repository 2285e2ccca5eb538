#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "motocell/error.hpp"

namespace motocell {

// All arithmetic in this library is exact: arbitrary-precision integers
// for point counts and exact rationals for affine linear algebra.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

// Parses "a/b" or "a" with optional sign; denominator must be positive
// after normalization.  Used by the arrangement file format.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> Rational {
    fail(Errc::parse_error, "malformed rational '" + text + "'");
  };
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) return bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    return bad();
  }
}

// Canonical form "num/den" with den > 0 and gcd(num, den) = 1.
inline std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Trial division; q up to 2^32 is enough for the point-count oracles.
inline bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return true;  // q itself is prime
}

}  // namespace motocell
