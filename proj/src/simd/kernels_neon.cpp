// aarch64 only. vmulq/vaddq/vsubq keep the scalar rounding; vfmaq is avoided on purpose.

#include <arm_neon.h>

#include <cassert>

#include "sgb/simd/kernels.hpp"

namespace sgb::simd {

namespace {

void rotate_pair_neon(std::span<double> x, std::span<double> y, double c, double s) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  double* xp = x.data();
  double* yp = y.data();
  const float64x2_t vc = vdupq_n_f64(c);
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t a = vld1q_f64(xp + i);
    const float64x2_t b = vld1q_f64(yp + i);
    vst1q_f64(xp + i, vsubq_f64(vmulq_f64(vc, a), vmulq_f64(vs, b)));
    vst1q_f64(yp + i, vaddq_f64(vmulq_f64(vs, a), vmulq_f64(vc, b)));
  }
  for (; i < n; ++i) {
    const double a = xp[i];
    const double b = yp[i];
    xp[i] = c * a - s * b;
    yp[i] = s * a + c * b;
  }
}

void axpy_neon(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t prod = vmulq_f64(va, vld1q_f64(x.data() + i));
    vst1q_f64(y.data() + i, vaddq_f64(vld1q_f64(y.data() + i), prod));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double sum_squares_neon(std::span<const double> x) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= x.size(); i += 2) {
    const float64x2_t a = vld1q_f64(x.data() + i);
    acc = vaddq_f64(acc, vmulq_f64(a, a));
  }
  double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < x.size(); ++i) total += x[i] * x[i];
  return total;
}

}  // namespace

const KernelTable& neon_kernel_table() {
  static const KernelTable table{"neon", rotate_pair_neon, axpy_neon, sum_squares_neon};
  return table;
}

}  // namespace sgb::simd
