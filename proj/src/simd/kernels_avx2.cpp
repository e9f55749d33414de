// Compiled with -mavx2 only. Do not enable FMA here: the rotation and axpy
// kernels must round exactly like the scalar reference.

#include <immintrin.h>

#include <cassert>

#include "sgb/simd/kernels.hpp"

namespace sgb::simd {

namespace {

void rotate_pair_avx2(std::span<double> x, std::span<double> y, double c, double s) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  double* xp = x.data();
  double* yp = y.data();
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(xp + i);
    const __m256d b = _mm256_loadu_pd(yp + i);
    _mm256_storeu_pd(xp + i, _mm256_sub_pd(_mm256_mul_pd(vc, a), _mm256_mul_pd(vs, b)));
    _mm256_storeu_pd(yp + i, _mm256_add_pd(_mm256_mul_pd(vs, a), _mm256_mul_pd(vc, b)));
  }
  for (; i < n; ++i) {
    const double a = xp[i];
    const double b = yp[i];
    xp[i] = c * a - s * b;
    yp[i] = s * a + c * b;
  }
}

void axpy_avx2(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const double* xp = x.data();
  double* yp = y.data();
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(xp + i));
    _mm256_storeu_pd(yp + i, _mm256_add_pd(_mm256_loadu_pd(yp + i), prod));
  }
  for (; i < n; ++i) yp[i] += alpha * xp[i];
}

double sum_squares_avx2(std::span<const double> x) {
  const std::size_t n = x.size();
  const double* xp = x.data();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d a = _mm256_loadu_pd(xp + i);
    const __m256d b = _mm256_loadu_pd(xp + i + 4);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(a, a));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(b, b));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) total += xp[i] * xp[i];
  return total;
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{"avx2", rotate_pair_avx2, axpy_avx2, sum_squares_avx2};
  return table;
}

}  // namespace sgb::simd
