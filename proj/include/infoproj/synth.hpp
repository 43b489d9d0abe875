#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "infoproj/data_model.hpp"

namespace infoproj {

enum class SynthVariant { TwoScale, OutlierPair };

/// Parameters for the synthetic designs.
///
/// two_scale: n_large points from N(0, diag(v)) and n_small points from
/// N(0, scale_factor * diag(v')), with v, v' drawn per coordinate from chi^2(1).
/// Which population receives scale_factor is configurable; by default it is
/// the smaller one, making the minority the high-spread group.
///
/// outlier_pair: n_large inliers from N(0, [[4,0],[0,1]]) and n_small outliers
/// from N(0, [[16,12],[12,13]]); d must be 2.
struct SynthSpec {
  std::uint64_t seed = 0;
  SynthVariant variant = SynthVariant::TwoScale;
  std::size_t n_large = 8000;
  std::size_t n_small = 2000;
  std::size_t d = 100;
  double scale_factor = 100.0;
  bool scale_minority = true;

  static SynthSpec two_scale_defaults(std::uint64_t seed);
  static SynthSpec outlier_pair_defaults(std::uint64_t seed);
  void validate() const;
};

struct SynthData {
  DataMatrix x;             // centered
  std::vector<int> labels;  // 0 = first (large) population, 1 = second (small)
};

SynthData gen_two_scale_gaussians(const SynthSpec& spec);
SynthData gen_outlier_pair(const SynthSpec& spec);

/// Dispatches on spec.variant.
SynthData generate(const SynthSpec& spec);

}  // namespace infoproj
