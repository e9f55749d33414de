#include "sgb/simd/kernels.hpp"

#include <cassert>

namespace sgb::simd {
namespace {

void rotate_pair_scalar(std::span<double> x, std::span<double> y, double c, double s) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  double* xp = x.data();
  double* yp = y.data();
  for (std::size_t i = 0; i < n; ++i) {
    const double a = xp[i];
    const double b = yp[i];
    xp[i] = c * a - s * b;
    yp[i] = s * a + c * b;
  }
}

void axpy_scalar(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

double sum_squares_scalar(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return acc;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", rotate_pair_scalar, axpy_scalar, sum_squares_scalar};
  return table;
}

}  // namespace sgb::simd
