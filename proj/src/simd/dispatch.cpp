#include <atomic>

#include "infoproj/errors.hpp"
#include "infoproj/simd/kernels.hpp"

namespace infoproj::simd {
namespace {

bool cpu_has_avx2_fma() {
#if defined(INFOPROJ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{&kernels_for(detect_level())};
  return slot;
}

}  // namespace

std::string_view level_name(SimdLevel level) {
  switch (level) {
    case SimdLevel::Scalar:
      return "scalar";
    case SimdLevel::Avx2:
      return "avx2";
    case SimdLevel::Neon:
      return "neon";
  }
  return "unknown";
}

bool level_supported(SimdLevel level) {
  switch (level) {
    case SimdLevel::Scalar:
      return true;
    case SimdLevel::Avx2:
      return cpu_has_avx2_fma();
    case SimdLevel::Neon:
#if defined(INFOPROJ_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

SimdLevel detect_level() {
  if (level_supported(SimdLevel::Avx2)) return SimdLevel::Avx2;
  if (level_supported(SimdLevel::Neon)) return SimdLevel::Neon;
  return SimdLevel::Scalar;
}

const KernelTable& kernels_for(SimdLevel level) {
  if (!level_supported(level)) {
    throw Unsupported("SIMD level '" + std::string(level_name(level)) + "' is not available");
  }
  switch (level) {
#if defined(INFOPROJ_HAVE_AVX2)
    case SimdLevel::Avx2:
      return detail::avx2_table();
#endif
#if defined(INFOPROJ_HAVE_NEON)
    case SimdLevel::Neon:
      return detail::neon_table();
#endif
    default:
      return detail::scalar_table();
  }
}

const KernelTable& kernels() { return *active_slot().load(std::memory_order_acquire); }

void set_active_level(SimdLevel level) {
  active_slot().store(&kernels_for(level), std::memory_order_release);
}

SimdLevel active_level() { return kernels().level; }

}  // namespace infoproj::simd
