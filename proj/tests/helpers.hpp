#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include <Eigen/QR>

#include "infoproj/data_model.hpp"
#include "infoproj/rng.hpp"

namespace infoproj::testing {

inline Matrix rows(std::initializer_list<std::initializer_list<double>> r) {
  const auto n = static_cast<Eigen::Index>(r.size());
  const auto d = static_cast<Eigen::Index>(r.begin()->size());
  Matrix m(n, d);
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline DataMatrix centered_rows(std::initializer_list<std::initializer_list<double>> r) {
  return center(DataMatrix(rows(r)));
}

/// Centered n x d Gaussian data with per-column scales drawn from [0.2, 3].
inline DataMatrix random_data(std::uint64_t seed, Eigen::Index n, Eigen::Index d) {
  GaussianRng rng(seed);
  Vector scale(d);
  for (Eigen::Index j = 0; j < d; ++j) scale[j] = 0.2 + 2.8 * rng.uniform();
  Matrix x(n, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) x(i, j) = scale[j] * rng.normal();
  }
  return center(DataMatrix(std::move(x)));
}

inline Matrix random_orthonormal(GaussianRng& rng, Eigen::Index d, Eigen::Index r) {
  Matrix g(d, r);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) g(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(d, r);
}

inline Matrix random_symmetric(GaussianRng& rng, Eigen::Index d) {
  Matrix a(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = rng.normal();
  }
  return 0.5 * (a + a.transpose());
}

}  // namespace infoproj::testing
