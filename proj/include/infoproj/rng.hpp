#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "infoproj/types.hpp"

namespace infoproj {

/// Seeded Gaussian source with a frozen algorithm: std::mt19937_64 (whose output
/// sequence the standard pins down) feeding the Box-Muller transform. Unlike
/// std::normal_distribution, the stream is identical across standard libraries.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on (0, 1].
  double uniform();
  double normal();
  Vector normal_vector(Eigen::Index size);
  /// Uniform direction on the unit sphere in R^d.
  Vector unit_vector(Eigen::Index d);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace infoproj
