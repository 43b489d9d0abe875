#include "infoproj/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "infoproj/errors.hpp"

namespace infoproj {
namespace {

constexpr double kShift = 8.0;

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw InvalidInput(std::string(fn) + ": argument must be positive and finite");
  }
}

void require_dimension(int d) {
  if (d < 1) throw InvalidInput("kappa: dimension must be >= 1");
}

}  // namespace

double digamma(double x) {
  require_positive(x, "digamma");
  double acc = 0.0;
  while (x < kShift) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum B_2k / (2k x^2k)
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 -
                                      inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12))))));
  return acc + std::log(x) - 0.5 * inv - series;
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  double shift_prod = 1.0;
  while (x < kShift) {
    shift_prod *= x;
    x += 1.0;
  }
  // Stirling: (x - 1/2) ln x - x + ln(2 pi)/2 + sum B_2k / (2k (2k-1) x^(2k-1))
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12 -
             inv2 * (1.0 / 360 -
                     inv2 * (1.0 / 1260 -
                             inv2 * (1.0 / 1680 -
                                     inv2 * (1.0 / 1188 - inv2 * (691.0 / 360360 - inv2 / 156))))));
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + series - std::log(shift_prod);
}

double kappa(double nu, int d) {
  require_positive(nu, "kappa");
  require_dimension(d);
  // psi(y + 1) = psi(y) + 1/y telescopes the integer part of d/2 exactly.
  const double half = 0.5 * nu;
  double sum = 0.0;
  const int whole = d / 2;
  for (int k = 0; k < whole; ++k) sum += 1.0 / (half + k);
  if (d % 2 == 1) {
    const double y = half + whole;
    sum += digamma(y + 0.5) - digamma(y);
  }
  return sum;
}

double kappa_inverse(double c, int d) {
  if (!(c > 0.0) || !std::isfinite(c)) throw OutOfRange("kappa_inverse: c must be positive");
  require_dimension(d);

  double lo = 1e-6;
  double hi = 1e8;
  while (kappa(lo, d) < c) {
    lo *= 1e-4;
    if (lo < 1e-300) throw OutOfRange("kappa_inverse: c too large to bracket");
  }
  while (kappa(hi, d) > c) {
    hi *= 1e4;
    if (hi > 1e300) throw OutOfRange("kappa_inverse: c too small to bracket");
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 4000 && hi - lo > 4.0 * eps * hi; ++iter) {
    const double mid = hi > 4.0 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (kappa(mid, d) > c) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace infoproj
