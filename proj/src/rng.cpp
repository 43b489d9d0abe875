#include "infoproj/rng.hpp"

#include <cmath>
#include <numbers>

namespace infoproj {

double GaussianRng::uniform() {
  // 53 random bits mapped to (0, 1]; never zero so log() below is finite.
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianRng::normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

Vector GaussianRng::normal_vector(Eigen::Index size) {
  Vector v(size);
  for (Eigen::Index k = 0; k < size; ++k) v[k] = normal();
  return v;
}

Vector GaussianRng::unit_vector(Eigen::Index d) {
  for (;;) {
    Vector v = normal_vector(d);
    const double norm = v.norm();
    if (norm > 1e-300) return v / norm;
  }
}

}  // namespace infoproj
