#include "sgb/exact.hpp"

#include <cmath>

#include "sgb/errors.hpp"

namespace sgb {

ExactEigenvalue::ExactEigenvalue(Rational coefficient, i128 radicand) {
  if (radicand < 0) throw DomainError("negative radicand " + sgb::to_string(radicand));
  if (radicand == 0 || coefficient.sign() == 0) return;

  std::uint64_t outside = 1;
  std::uint64_t rest = to_u64(radicand);
  for (std::uint64_t f = 2; f <= rest / f; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      outside *= f;
    }
  }
  coefficient_ = coefficient * Rational(static_cast<i128>(outside));
  radicand_ = rest;
}

double ExactEigenvalue::value() const {
  return coefficient_.to_double() * std::sqrt(static_cast<double>(radicand_));
}

Rational ExactEigenvalue::square() const {
  return coefficient_ * coefficient_ * Rational(static_cast<i128>(radicand_));
}

ExactEigenvalue ExactEigenvalue::operator-() const {
  ExactEigenvalue r = *this;
  r.coefficient_ = -coefficient_;
  return r;
}

std::strong_ordering operator<=>(const ExactEigenvalue& a, const ExactEigenvalue& b) {
  if (a.sign() != b.sign()) return a.sign() <=> b.sign();
  if (a.sign() == 0) return std::strong_ordering::equal;
  const auto by_square = a.square() <=> b.square();
  return a.sign() > 0 ? by_square : 0 <=> by_square;
}

std::string ExactEigenvalue::to_string() const {
  if (radicand_ == 1) return coefficient_.to_string();
  const std::string root = "√" + std::to_string(radicand_);
  if (coefficient_ == Rational(1)) return root;
  if (coefficient_ == Rational(-1)) return "-" + root;
  if (coefficient_.is_integer()) return coefficient_.to_string() + root;
  return "(" + coefficient_.to_string() + ")" + root;
}

}  // namespace sgb
