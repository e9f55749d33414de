#pragma once

// Numbers of the form c * sqrt(k) with c rational and k squarefree.

#include <compare>
#include <cstdint>
#include <string>

#include "sgb/checked.hpp"

namespace sgb {

class ExactEigenvalue {
 public:
  ExactEigenvalue() = default;

  /// c * sqrt(k) for any k >= 0; square factors of k are moved into c.
  ExactEigenvalue(Rational coefficient, i128 radicand);

  static ExactEigenvalue integer(i128 v) { return ExactEigenvalue(Rational(v), 1); }
  static ExactEigenvalue sqrt_of(i128 k) { return ExactEigenvalue(Rational(1), k); }

  const Rational& coefficient() const { return coefficient_; }
  std::uint64_t radicand() const { return radicand_; }
  bool is_rational() const { return radicand_ == 1; }
  int sign() const { return coefficient_.sign(); }

  double value() const;

  /// c^2 k, always rational.
  Rational square() const;

  ExactEigenvalue operator-() const;
  ExactEigenvalue abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const ExactEigenvalue&, const ExactEigenvalue&) = default;

  /// Exact ordering of the real values.
  friend std::strong_ordering operator<=>(const ExactEigenvalue& a, const ExactEigenvalue& b);

  /// "26", "-1", "√3", "-√3", "2√6", "5/2", "(1/2)√3".
  std::string to_string() const;

 private:
  Rational coefficient_{0};
  std::uint64_t radicand_ = 1;
};

}  // namespace sgb
