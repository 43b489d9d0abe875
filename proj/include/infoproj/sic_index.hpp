#pragma once

#include <span>

#include "infoproj/data_model.hpp"

namespace infoproj {

/// Subjective information content of a projection pattern, in nats.
///
/// `total` is -log of the background probability of the observed resolution-Delta
/// box. It splits into the part that depends on the data, the part from the
/// plot resolution, and the density's normalization.
struct SicValue {
  double total = 0.0;
  double data_term = 0.0;
  double resolution_term = 0.0;
  double constant_term = 0.0;
};

/// Gaussian prior N(0, sigma^2 I), single direction.
SicValue sic_gaussian_1d(const DataMatrix& x, const UnitVector& w, double sigma, double delta);

/// Gaussian prior, r orthonormal directions with per-axis resolutions.
SicValue sic_gaussian_rd(const DataMatrix& x, const OrthonormalBasis& w, double sigma,
                         std::span<const double> deltas);

/// Multivariate-t prior with scale rho and nu degrees of freedom, one direction.
/// rho must be positive (the normalization diverges at rho = 0).
SicValue sic_t_1d(const DataMatrix& x, const UnitVector& w, double rho, double nu, double delta);

/// Multivariate-t prior, r directions.
SicValue sic_t_rd(const DataMatrix& x, const OrthonormalBasis& w, double rho, double nu,
                  std::span<const double> deltas);

/// log-density of the 1-D marginal t(nu) with scale rho, evaluated at p.
double t_log_density_1d(double p, double rho, double nu);

/// sum_i log(rho + (x_i . w)^2). Returns -inf when rho = 0 and some projection
/// is exactly zero.
double tpca_objective(const DataMatrix& x, const UnitVector& w, double rho);

/// Same sum from precomputed projections p_i = x_i . w.
double tpca_objective_from_projections(std::span<const double> projections, double rho);

/// w'X'Xw - 2 sigma^2 n log(max(Xw) - min(Xw)): the Gaussian-prior score when the
/// plot axes are stretched to the data range. Returns -inf for a constant
/// projection. Evaluation only.
double stretched_sic_objective(const DataMatrix& x, const UnitVector& w, double sigma);

/// Projections X w, through the active SIMD kernel.
Vector project(const DataMatrix& x, const Vector& w);

}  // namespace infoproj
