#include "infoproj/synth.hpp"

#include <cmath>

#include "infoproj/errors.hpp"
#include "infoproj/rng.hpp"

namespace infoproj {

SynthSpec SynthSpec::two_scale_defaults(std::uint64_t seed) {
  SynthSpec spec;
  spec.seed = seed;
  return spec;
}

SynthSpec SynthSpec::outlier_pair_defaults(std::uint64_t seed) {
  SynthSpec spec;
  spec.seed = seed;
  spec.variant = SynthVariant::OutlierPair;
  spec.n_large = 1000;
  spec.n_small = 100;
  spec.d = 2;
  return spec;
}

void SynthSpec::validate() const {
  if (n_large < 1 || n_small < 1) throw InvalidInput("synth: population sizes must be >= 1");
  if (d < 1) throw InvalidInput("synth: d must be >= 1");
  if (!(scale_factor > 0.0) || !std::isfinite(scale_factor)) {
    throw InvalidInput("synth: scale_factor must be positive");
  }
  if (variant == SynthVariant::OutlierPair && d != 2) {
    throw InvalidInput("synth: outlier_pair is two-dimensional");
  }
}

SynthData gen_two_scale_gaussians(const SynthSpec& spec) {
  spec.validate();
  if (spec.variant != SynthVariant::TwoScale) throw InvalidInput("spec is not two_scale");
  GaussianRng rng(spec.seed);
  const auto d = static_cast<Eigen::Index>(spec.d);
  const auto n = static_cast<Eigen::Index>(spec.n_large + spec.n_small);
  Matrix x(n, d);
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(n));

  Eigen::Index row = 0;
  for (int population = 0; population < 2; ++population) {
    const std::size_t count = population == 0 ? spec.n_large : spec.n_small;
    const bool scaled = (population == 1) == spec.scale_minority;
    // chi^2(1) variances as squared standard normals.
    Vector sd(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      const double z = rng.normal();
      sd[j] = std::sqrt(z * z * (scaled ? spec.scale_factor : 1.0));
    }
    for (std::size_t i = 0; i < count; ++i, ++row) {
      for (Eigen::Index j = 0; j < d; ++j) x(row, j) = sd[j] * rng.normal();
      labels.push_back(population);
    }
  }
  return {center(DataMatrix(std::move(x))), std::move(labels)};
}

SynthData gen_outlier_pair(const SynthSpec& spec) {
  spec.validate();
  if (spec.variant != SynthVariant::OutlierPair) throw InvalidInput("spec is not outlier_pair");
  GaussianRng rng(spec.seed);
  const auto n = static_cast<Eigen::Index>(spec.n_large + spec.n_small);
  Matrix x(n, 2);
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(n));
  Eigen::Index row = 0;
  // Cholesky factors: diag(2, 1) and [[4, 0], [3, 2]] for [[16, 12], [12, 13]].
  for (std::size_t i = 0; i < spec.n_large; ++i, ++row) {
    const double z0 = rng.normal();
    const double z1 = rng.normal();
    x(row, 0) = 2.0 * z0;
    x(row, 1) = z1;
    labels.push_back(0);
  }
  for (std::size_t i = 0; i < spec.n_small; ++i, ++row) {
    const double z0 = rng.normal();
    const double z1 = rng.normal();
    x(row, 0) = 4.0 * z0;
    x(row, 1) = 3.0 * z0 + 2.0 * z1;
    labels.push_back(1);
  }
  return {center(DataMatrix(std::move(x))), std::move(labels)};
}

SynthData generate(const SynthSpec& spec) {
  return spec.variant == SynthVariant::TwoScale ? gen_two_scale_gaussians(spec)
                                                : gen_outlier_pair(spec);
}

}  // namespace infoproj
