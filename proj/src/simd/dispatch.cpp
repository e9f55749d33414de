#include <cstdlib>
#include <string_view>

#include "sgb/simd/kernels.hpp"

namespace sgb::simd {

#if defined(SGB_HAVE_AVX2_KERNELS)
const KernelTable& avx2_kernel_table();
#endif
#if defined(SGB_HAVE_NEON_KERNELS)
const KernelTable& neon_kernel_table();
#endif

const KernelTable* avx2_kernels() {
#if defined(SGB_HAVE_AVX2_KERNELS)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(SGB_HAVE_NEON_KERNELS)
  // Advanced SIMD is mandatory on aarch64.
  return &neon_kernel_table();
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& select_kernels() {
  if (const char* forced = std::getenv("SGB_SIMD"); forced != nullptr) {
    if (std::string_view(forced) == "scalar") return scalar_kernels();
  }
  if (const auto* t = avx2_kernels()) return *t;
  if (const auto* t = neon_kernels()) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace sgb::simd
