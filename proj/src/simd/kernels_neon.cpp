// NEON is baseline on aarch64, so no feature probe is needed at runtime.

#include <arm_neon.h>

#include "infoproj/simd/kernels.hpp"

namespace infoproj::simd {
namespace {

double dot_neon(const double* a, const double* b, std::size_t d) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + 4 <= d; k += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + k), vld1q_f64(b + k));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + k + 2), vld1q_f64(b + k + 2));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; k < d; ++k) s += a[k] * b[k];
  return s;
}

inline void axpy_neon(double s, const double* x, double* out, std::size_t len) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t k = 0;
  for (; k + 2 <= len; k += 2) {
    vst1q_f64(out + k, vfmaq_f64(vld1q_f64(out + k), vs, vld1q_f64(x + k)));
  }
  for (; k < len; ++k) out[k] += s * x[k];
}

void project_rows_neon(const double* x, std::size_t n, std::size_t d, const double* w,
                       double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = dot_neon(x + i * d, w, d);
}

void accumulate_weighted_outer_neon(const double* x, std::size_t n, std::size_t d,
                                    const double* weight, double* a) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = x + i * d;
    for (std::size_t j = 0; j < d; ++j) {
      axpy_neon(weight[i] * xi[j], xi + j, a + j * d + j, d - j);
    }
  }
}

void weighted_row_sum_neon(const double* x, std::size_t n, std::size_t d, const double* coeff,
                           double* out) {
  for (std::size_t i = 0; i < n; ++i) axpy_neon(coeff[i], x + i * d, out, d);
}

void quadratic_forms_neon(const double* x, std::size_t n, std::size_t d, const double* m,
                          double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = x + i * d;
    double q = 0.0;
    for (std::size_t j = 0; j < d; ++j) q += xi[j] * dot_neon(m + j * d, xi, d);
    out[i] = q;
  }
}

void deflate_rows_neon(double* x, std::size_t n, std::size_t d, const double* w) {
  for (std::size_t i = 0; i < n; ++i) {
    double* xi = x + i * d;
    axpy_neon(-dot_neon(xi, w, d), w, xi, d);
  }
}

}  // namespace

namespace detail {
const KernelTable& neon_table() {
  static const KernelTable table{SimdLevel::Neon,
                                 dot_neon,
                                 project_rows_neon,
                                 accumulate_weighted_outer_neon,
                                 weighted_row_sum_neon,
                                 quadratic_forms_neon,
                                 deflate_rows_neon};
  return table;
}
}  // namespace detail

}  // namespace infoproj::simd
