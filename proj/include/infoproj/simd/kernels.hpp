#pragma once

// Data-parallel inner loops shared by every solver.
//
// Each kernel has a portable scalar reference and, where the target allows,
// an AVX2+FMA (x86-64) or NEON (aarch64) variant. The active table is picked
// once at startup from CPU features and can be overridden for testing.
// Matrices are dense row-major; X is n x d, A and M are d x d.

#include <cstddef>
#include <span>
#include <string_view>

namespace infoproj::simd {

enum class SimdLevel { Scalar, Avx2, Neon };

struct KernelTable {
  SimdLevel level;

  // sum_k a[k] * b[k]
  double (*dot)(const double* a, const double* b, std::size_t d);

  // out[i] = x_i . w
  void (*project_rows)(const double* x, std::size_t n, std::size_t d, const double* w,
                       double* out);

  // upper triangle (k >= j) of A += sum_i weight[i] * x_i x_i'
  void (*accumulate_weighted_outer)(const double* x, std::size_t n, std::size_t d,
                                    const double* weight, double* a);

  // out += sum_i coeff[i] * x_i
  void (*weighted_row_sum)(const double* x, std::size_t n, std::size_t d, const double* coeff,
                           double* out);

  // out[i] = x_i' M x_i
  void (*quadratic_forms)(const double* x, std::size_t n, std::size_t d, const double* m,
                          double* out);

  // x_i <- x_i - (x_i . w) w, in place
  void (*deflate_rows)(double* x, std::size_t n, std::size_t d, const double* w);
};

std::string_view level_name(SimdLevel level);

/// Whether this build contains the variant and the running CPU supports it.
bool level_supported(SimdLevel level);

/// Best supported level on this machine.
SimdLevel detect_level();

/// Table for a specific level; throws Unsupported when unavailable.
const KernelTable& kernels_for(SimdLevel level);

/// Currently active table (defaults to detect_level()).
const KernelTable& kernels();

/// Switches the active table for the whole process. Throws Unsupported when
/// the level is not available.
void set_active_level(SimdLevel level);

SimdLevel active_level();

/// Restores the previous level on destruction. Test helper.
class ScopedLevel {
 public:
  explicit ScopedLevel(SimdLevel level) : previous_(active_level()) { set_active_level(level); }
  ~ScopedLevel() { set_active_level(previous_); }
  ScopedLevel(const ScopedLevel&) = delete;
  ScopedLevel& operator=(const ScopedLevel&) = delete;

 private:
  SimdLevel previous_;
};

namespace detail {
const KernelTable& scalar_table();
#if defined(INFOPROJ_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(INFOPROJ_HAVE_NEON)
const KernelTable& neon_table();
#endif
}  // namespace detail

inline double dot(std::span<const double> a, std::span<const double> b) {
  return kernels().dot(a.data(), b.data(), a.size());
}

}  // namespace infoproj::simd
