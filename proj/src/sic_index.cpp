#include "infoproj/sic_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "infoproj/errors.hpp"
#include "infoproj/simd/kernels.hpp"
#include "infoproj/special_functions.hpp"

namespace infoproj {
namespace {

void require_dims(const DataMatrix& x, std::size_t d) {
  if (x.d() != d) throw InvalidInput("direction dimension does not match data dimension");
}

double resolution_term(std::size_t n, std::span<const double> deltas) {
  double sum = 0.0;
  for (double delta : deltas) {
    if (!(delta > 0.0) || !std::isfinite(delta)) throw InvalidInput("delta must be positive");
    sum += std::log(delta);
  }
  return -static_cast<double>(n) * sum;
}

void require_t_params(double rho, double nu) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw InvalidInput("t-prior SIC requires rho > 0 (use tpca_objective to rank at rho = 0)");
  }
  if (!(nu > 0.0) || !std::isfinite(nu)) throw InvalidInput("nu must be positive");
}

// -log of the normalization of an r-dimensional t(nu) with scale rho.
double t_neg_log_norm(double rho, double nu, std::size_t r) {
  const double rr = static_cast<double>(r);
  return -(log_gamma(0.5 * (nu + rr)) - log_gamma(0.5 * nu) -
           0.5 * rr * std::log(std::numbers::pi * rho));
}

SicValue assemble(double data, double resolution, double constant) {
  return {data + resolution + constant, data, resolution, constant};
}

}  // namespace

Vector project(const DataMatrix& x, const Vector& w) {
  if (static_cast<std::size_t>(w.size()) != x.d()) {
    throw InvalidInput("direction dimension does not match data dimension");
  }
  Vector out(static_cast<Eigen::Index>(x.n()));
  simd::kernels().project_rows(x.data(), x.n(), x.d(), w.data(), out.data());
  return out;
}

SicValue sic_gaussian_1d(const DataMatrix& x, const UnitVector& w, double sigma, double delta) {
  const double deltas[] = {delta};
  return sic_gaussian_rd(x, OrthonormalBasis::from_unit(w), sigma, deltas);
}

SicValue sic_gaussian_rd(const DataMatrix& x, const OrthonormalBasis& w, double sigma,
                         std::span<const double> deltas) {
  require_dims(x, w.d());
  if (deltas.size() != w.r()) throw InvalidInput("need one delta per projection axis");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidInput("sigma must be positive");
  const auto n = static_cast<double>(x.n());
  const auto r = static_cast<double>(w.r());
  // trace(W'X'XW) = sum of squared projections over all axes.
  double quad = 0.0;
  for (std::size_t j = 0; j < w.r(); ++j) quad += project(x, w.mat().col(static_cast<Eigen::Index>(j))).squaredNorm();
  const double sigma2 = sigma * sigma;
  return assemble(quad / (2.0 * sigma2), resolution_term(x.n(), deltas),
                  0.5 * n * r * std::log(2.0 * std::numbers::pi * sigma2));
}

SicValue sic_t_1d(const DataMatrix& x, const UnitVector& w, double rho, double nu, double delta) {
  const double deltas[] = {delta};
  return sic_t_rd(x, OrthonormalBasis::from_unit(w), rho, nu, deltas);
}

SicValue sic_t_rd(const DataMatrix& x, const OrthonormalBasis& w, double rho, double nu,
                  std::span<const double> deltas) {
  require_dims(x, w.d());
  if (deltas.size() != w.r()) throw InvalidInput("need one delta per projection axis");
  require_t_params(rho, nu);
  const std::size_t r = w.r();
  // x_i'WW'x_i = ||W'x_i||^2
  Vector q = Vector::Zero(static_cast<Eigen::Index>(x.n()));
  for (std::size_t j = 0; j < r; ++j) {
    q += project(x, w.mat().col(static_cast<Eigen::Index>(j))).cwiseAbs2();
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) sum += std::log1p(q[i] / rho);
  const double data = 0.5 * (nu + static_cast<double>(r)) * sum;
  return assemble(data, resolution_term(x.n(), deltas),
                  static_cast<double>(x.n()) * t_neg_log_norm(rho, nu, r));
}

double t_log_density_1d(double p, double rho, double nu) {
  require_t_params(rho, nu);
  return -t_neg_log_norm(rho, nu, 1) - 0.5 * (nu + 1.0) * std::log1p(p * p / rho);
}

double tpca_objective_from_projections(std::span<const double> projections, double rho) {
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw InvalidInput("rho must be nonnegative");
  double sum = 0.0;
  for (double p : projections) sum += std::log(rho + p * p);
  return sum;
}

double tpca_objective(const DataMatrix& x, const UnitVector& w, double rho) {
  const Vector p = project(x, w.vec());
  return tpca_objective_from_projections({p.data(), static_cast<std::size_t>(p.size())}, rho);
}

double stretched_sic_objective(const DataMatrix& x, const UnitVector& w, double sigma) {
  if (!(sigma > 0.0)) throw InvalidInput("sigma must be positive");
  const Vector p = project(x, w.vec());
  const double range = p.maxCoeff() - p.minCoeff();
  if (!(range > 0.0)) return -std::numeric_limits<double>::infinity();
  return p.squaredNorm() -
         2.0 * sigma * sigma * static_cast<double>(x.n()) * std::log(range);
}

}  // namespace infoproj
