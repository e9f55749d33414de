#include "sgb/checked.hpp"

#include <algorithm>

namespace sgb {

std::uint64_t to_u64(i128 v) {
  if (v < 0 || v > static_cast<i128>(UINT64_MAX)) {
    throw OverflowError("value does not fit in 64 bits: " + to_string(v));
  }
  return static_cast<std::uint64_t>(v);
}

i128 abs128(i128 v) { return v < 0 ? checked_sub(0, v) : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work on the unsigned magnitude so INT128_MIN renders correctly.
  u128 mag = negative ? u128(0) - static_cast<u128>(v) : static_cast<u128>(v);
  std::string out;
  while (mag != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Rational::Rational(i128 num, i128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = checked_sub(0, num);
    den = checked_sub(0, den);
  }
  const i128 g = gcd128(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

double Rational::to_double() const {
  if (den_ == 1) return static_cast<double>(num_);
  // Split off the integer part so huge numerators keep their fractional digits.
  const i128 whole = num_ / den_;
  const i128 rem = num_ % den_;
  return static_cast<double>(whole) +
         static_cast<double>(static_cast<long double>(rem) / static_cast<long double>(den_));
}

Rational operator+(const Rational& a, const Rational& b) {
  const i128 g = gcd128(a.den_, b.den_);
  const i128 bd = b.den_ / g;
  const i128 ad = a.den_ / g;
  return Rational(checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, ad)),
                  checked_mul(a.den_, bd));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const i128 g1 = gcd128(a.num_, b.den_);
  const i128 g2 = gcd128(b.num_, a.den_);
  const i128 n1 = g1 > 1 ? a.num_ / g1 : a.num_;
  const i128 d2 = g1 > 1 ? b.den_ / g1 : b.den_;
  const i128 n2 = g2 > 1 ? b.num_ / g2 : b.num_;
  const i128 d1 = g2 > 1 ? a.den_ / g2 : a.den_;
  return Rational(checked_mul(n1, n2), checked_mul(d1, d2));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("division by zero rational");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const i128 lhs = checked_mul(a.num_, b.den_);
  const i128 rhs = checked_mul(b.num_, a.den_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return sgb::to_string(num_);
  return sgb::to_string(num_) + "/" + sgb::to_string(den_);
}

}  // namespace sgb
