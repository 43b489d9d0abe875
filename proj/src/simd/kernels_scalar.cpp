#include "infoproj/simd/kernels.hpp"

namespace infoproj::simd {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t d) {
  double s = 0.0;
  for (std::size_t k = 0; k < d; ++k) s += a[k] * b[k];
  return s;
}

void project_rows_scalar(const double* x, std::size_t n, std::size_t d, const double* w,
                         double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = dot_scalar(x + i * d, w, d);
}

void accumulate_weighted_outer_scalar(const double* x, std::size_t n, std::size_t d,
                                      const double* weight, double* a) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = x + i * d;
    for (std::size_t j = 0; j < d; ++j) {
      const double s = weight[i] * xi[j];
      double* row = a + j * d;
      for (std::size_t k = j; k < d; ++k) row[k] += s * xi[k];
    }
  }
}

void weighted_row_sum_scalar(const double* x, std::size_t n, std::size_t d, const double* coeff,
                             double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = x + i * d;
    const double c = coeff[i];
    for (std::size_t k = 0; k < d; ++k) out[k] += c * xi[k];
  }
}

void quadratic_forms_scalar(const double* x, std::size_t n, std::size_t d, const double* m,
                            double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = x + i * d;
    double q = 0.0;
    for (std::size_t j = 0; j < d; ++j) q += xi[j] * dot_scalar(m + j * d, xi, d);
    out[i] = q;
  }
}

void deflate_rows_scalar(double* x, std::size_t n, std::size_t d, const double* w) {
  for (std::size_t i = 0; i < n; ++i) {
    double* xi = x + i * d;
    const double p = dot_scalar(xi, w, d);
    for (std::size_t k = 0; k < d; ++k) xi[k] -= p * w[k];
  }
}

}  // namespace

namespace detail {
const KernelTable& scalar_table() {
  static const KernelTable table{SimdLevel::Scalar,
                                 dot_scalar,
                                 project_rows_scalar,
                                 accumulate_weighted_outer_scalar,
                                 weighted_row_sum_scalar,
                                 quadratic_forms_scalar,
                                 deflate_rows_scalar};
  return table;
}
}  // namespace detail

}  // namespace infoproj::simd
