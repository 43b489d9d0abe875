#include "infoproj/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "infoproj/errors.hpp"
#include "infoproj/sic_index.hpp"

namespace infoproj {

std::uint64_t cover_count(std::size_t n, std::size_t d) {
  if (n < 1 || d < 1) throw InvalidInput("cover_count: n and d must be positive");
  if (n > 60) throw OutOfRange("cover_count: n > 60 is not supported");
  // Row n-1 of Pascal's triangle; C(59, k) fits comfortably in 64 bits.
  const std::size_t m = n - 1;
  std::uint64_t binom = 1;
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < d && k <= m; ++k) {
    sum += binom;
    binom = binom * (m - k) / (k + 1);
  }
  return 2 * sum;
}

DichotomySet enumerate_dichotomies_2d(const DataMatrix& x) {
  if (x.d() != 2) throw InvalidInput("enumerate_dichotomies_2d: data must be two-dimensional");
  const Matrix& v = x.values();
  const double two_pi = 2.0 * std::numbers::pi;

  // x_i . w(theta) = 0 at theta = atan2(x_i) +- pi/2; collect both on [0, 2pi).
  std::vector<double> angles;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    if (v(i, 0) == 0.0 && v(i, 1) == 0.0) {
      throw InvalidInput("enumerate_dichotomies_2d: zero row " + std::to_string(i));
    }
    const double base = std::atan2(v(i, 1), v(i, 0)) + 0.5 * std::numbers::pi;
    for (double a : {base, base + std::numbers::pi}) {
      double wrapped = std::fmod(a, two_pi);
      if (wrapped < 0.0) wrapped += two_pi;
      angles.push_back(wrapped);
    }
  }
  std::sort(angles.begin(), angles.end());
  std::vector<double> distinct;
  for (double a : angles) {
    if (distinct.empty() || a - distinct.back() > 1e-12) distinct.push_back(a);
  }
  if (distinct.size() > 1 && distinct.front() + two_pi - distinct.back() <= 1e-12) {
    distinct.pop_back();
  }

  DichotomySet out;
  out.degenerate = distinct.size() < 2 * static_cast<std::size_t>(v.rows());
  std::set<SignVector> seen;
  for (std::size_t k = 0; k < distinct.size(); ++k) {
    const double next = k + 1 < distinct.size() ? distinct[k + 1] : distinct.front() + two_pi;
    const double mid = 0.5 * (distinct[k] + next);
    Vector w(2);
    w << std::cos(mid), std::sin(mid);
    const Vector p = v * w;
    SignVector s(static_cast<std::size_t>(p.size()));
    bool valid = true;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (p[i] == 0.0) valid = false;
      s[static_cast<std::size_t>(i)] = p[i] > 0.0 ? 1 : -1;
    }
    if (valid && seen.insert(s).second) {
      out.signs.push_back(std::move(s));
      out.witnesses.push_back(std::move(w));
    }
  }
  return out;
}

GridOptimum grid_best_w(const DataMatrix& x, double rho, std::size_t resolution) {
  if (x.d() != 2 && x.d() != 3) throw Unsupported("grid_best_w: only d = 2 or d = 3");
  if (resolution < 1000) throw InvalidInput("grid_best_w: resolution must be >= 1000");

  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  Vector best_w;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < resolution; ++k) {
    Vector w(static_cast<Eigen::Index>(x.d()));
    if (x.d() == 2) {
      const double theta = std::numbers::pi * static_cast<double>(k) / static_cast<double>(resolution);
      w << std::cos(theta), std::sin(theta);
    } else {
      const double z = (static_cast<double>(k) + 0.5) / static_cast<double>(resolution);
      const double radius = std::sqrt(1.0 - z * z);
      const double phi = golden_angle * static_cast<double>(k);
      w << radius * std::cos(phi), radius * std::sin(phi), z;
    }
    const double value = tpca_objective(x, UnitVector(w), rho);
    if (best_w.size() == 0 || value > best) {
      best = value;
      best_w = std::move(w);
    }
  }
  return {UnitVector(best_w), best};
}

}  // namespace infoproj
