#pragma once

// 128-bit checked integer helpers and an exact rational built on them.

#include <compare>
#include <cstdint>
#include <string>

#include "sgb/errors.hpp"

namespace sgb {

using i128 = __int128;
using u128 = unsigned __int128;

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
  return r;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit subtraction overflow");
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
  return r;
}

inline i128 checked_pow(i128 base, unsigned exponent) {
  i128 r = 1;
  for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

inline std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit multiplication overflow");
  return r;
}

inline std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit addition overflow");
  return r;
}

/// Narrows to uint64, throwing when the value is negative or too large.
std::uint64_t to_u64(i128 v);

i128 abs128(i128 v);
i128 gcd128(i128 a, i128 b);

/// Decimal rendering; std::to_string has no __int128 overload.
std::string to_string(i128 v);

/// Exact rational number with a positive, reduced denominator.
class Rational {
 public:
  Rational() = default;
  Rational(i128 integer) : num_(integer), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(i128 num, i128 den);

  i128 num() const { return num_; }
  i128 den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  double to_double() const;

  Rational operator-() const { return Rational(checked_sub(0, num_), den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// "7", "-3", "5/2".
  std::string to_string() const;

 private:
  i128 num_ = 0;
  i128 den_ = 1;
};

}  // namespace sgb
