#pragma once

// Dense double-precision inner loops used by matrix assembly and the Jacobi
// eigensolver. Each kernel has a scalar reference implementation and optional
// vector variants (AVX2 on x86-64, NEON on aarch64) selected at runtime.
//
// rotate_pair and axpy use only lane-wise mul/add/sub (no FMA), so every
// variant is bit-identical to the scalar reference. sum_squares reassociates
// the reduction and agrees only to rounding.

#include <cstddef>
#include <span>
#include <string_view>

namespace sgb::simd {

/// x' = c x - s y, y' = s x + c y, element-wise. x and y must have equal length.
using RotatePairFn = void (*)(std::span<double> x, std::span<double> y, double c, double s);

/// y += alpha x.
using AxpyFn = void (*)(double alpha, std::span<const double> x, std::span<double> y);

using SumSquaresFn = double (*)(std::span<const double> x);

struct KernelTable {
  std::string_view name;
  RotatePairFn rotate_pair;
  AxpyFn axpy;
  SumSquaresFn sum_squares;
};

const KernelTable& scalar_kernels();

/// nullptr when the variant was not compiled in or the CPU lacks the instructions.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best available table. SGB_SIMD=scalar in the environment forces the reference path.
const KernelTable& active_kernels();

}  // namespace sgb::simd
