// Built with -mavx2 -mfma; reached only through the dispatch table after a
// CPU feature check.

#include <immintrin.h>

#include "infoproj/simd/kernels.hpp"

namespace infoproj::simd {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* a, const double* b, std::size_t d) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= d; k += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4), acc1);
  }
  if (k + 4 <= d) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
    k += 4;
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < d; ++k) s += a[k] * b[k];
  return s;
}

// out[k..d) += s * x[k..d)
inline void axpy_avx2(double s, const double* x, double* out, std::size_t len) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t k = 0;
  for (; k + 4 <= len; k += 4) {
    __m256d o = _mm256_loadu_pd(out + k);
    o = _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + k), o);
    _mm256_storeu_pd(out + k, o);
  }
  for (; k < len; ++k) out[k] += s * x[k];
}

void project_rows_avx2(const double* x, std::size_t n, std::size_t d, const double* w,
                       double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = dot_avx2(x + i * d, w, d);
}

void accumulate_weighted_outer_avx2(const double* x, std::size_t n, std::size_t d,
                                    const double* weight, double* a) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = x + i * d;
    for (std::size_t j = 0; j < d; ++j) {
      axpy_avx2(weight[i] * xi[j], xi + j, a + j * d + j, d - j);
    }
  }
}

void weighted_row_sum_avx2(const double* x, std::size_t n, std::size_t d, const double* coeff,
                           double* out) {
  for (std::size_t i = 0; i < n; ++i) axpy_avx2(coeff[i], x + i * d, out, d);
}

void quadratic_forms_avx2(const double* x, std::size_t n, std::size_t d, const double* m,
                          double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = x + i * d;
    double q = 0.0;
    for (std::size_t j = 0; j < d; ++j) q += xi[j] * dot_avx2(m + j * d, xi, d);
    out[i] = q;
  }
}

void deflate_rows_avx2(double* x, std::size_t n, std::size_t d, const double* w) {
  for (std::size_t i = 0; i < n; ++i) {
    double* xi = x + i * d;
    axpy_avx2(-dot_avx2(xi, w, d), w, xi, d);
  }
}

}  // namespace

namespace detail {
const KernelTable& avx2_table() {
  static const KernelTable table{SimdLevel::Avx2,
                                 dot_avx2,
                                 project_rows_avx2,
                                 accumulate_weighted_outer_avx2,
                                 weighted_row_sum_avx2,
                                 quadratic_forms_avx2,
                                 deflate_rows_avx2};
  return table;
}
}  // namespace detail

}  // namespace infoproj::simd
