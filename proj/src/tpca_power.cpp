#include "infoproj/tpca_power.hpp"

#include <cmath>
#include <limits>
#include <span>

#include "infoproj/errors.hpp"
#include "infoproj/linalg.hpp"
#include "infoproj/pca.hpp"
#include "infoproj/rng.hpp"
#include "infoproj/sic_index.hpp"
#include "infoproj/simd/kernels.hpp"

namespace infoproj {
namespace {

constexpr int kMaxHalvings = 60;

void require_rho(double rho) {
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw InvalidInput("rho must be nonnegative");
}

std::span<const double> as_span(const Vector& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

// c_i = p_i / (rho + p_i^2), so that sum_i c_i x_i = A(w) w.
Vector stationarity_coefficients(const Vector& p, double rho) {
  Vector c(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const double denom = rho + p[i] * p[i];
    if (denom == 0.0) {
      throw SingularityError("weight 1/(rho + (x'w)^2) is singular", static_cast<std::size_t>(i));
    }
    c[i] = p[i] / denom;
  }
  return c;
}

Vector apply_weighted_scatter(const DataMatrix& x, const Vector& p, double rho) {
  const Vector c = stationarity_coefficients(p, rho);
  Vector out = Vector::Zero(static_cast<Eigen::Index>(x.d()));
  simd::kernels().weighted_row_sum(x.data(), x.n(), x.d(), c.data(), out.data());
  return out;
}

Vector project_out(Vector v, const Matrix& previous) {
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index j = 0; j < previous.cols(); ++j) v -= previous.col(j).dot(v) * previous.col(j);
  }
  return v;
}

// Unit vector in the orthogonal complement of `previous` built from the
// standard basis vector with the largest residual.
Vector canonical_complement(Eigen::Index d, const Matrix& previous) {
  Vector best;
  double best_norm = -1.0;
  for (Eigen::Index j = 0; j < d; ++j) {
    Vector u = project_out(Vector::Unit(d, j), previous);
    const double norm = u.norm();
    if (norm > best_norm * (1.0 + 1e-9)) {
      best_norm = norm;
      best = u;
    }
  }
  return best / best_norm;
}

struct RunResult {
  Vector w;
  double objective = -std::numeric_limits<double>::infinity();  // at the update rho
  std::vector<double> trace;
  int iterations = 0;
  bool converged = false;
  int backtracks = 0;
  double alpha = 0.0;
};

double default_alpha(const DataMatrix& x, const UnitVector& w0, double rho) {
  const double lambda_max = eigen_descending(weighted_scatter(x, w0, rho)).values[0];
  return lambda_max > 0.0 ? 1.0 / lambda_max : 1.0;
}

RunResult run_power(const DataMatrix& x, const Vector& w0, double rho, const Matrix& previous,
                    const PowerOptions& opts) {
  RunResult run;
  run.w = w0;
  run.alpha = opts.alpha ? *opts.alpha : default_alpha(x, UnitVector(w0), rho);

  Vector p = project(x, run.w);
  double f = tpca_objective_from_projections(as_span(p), rho);
  run.trace.push_back(f);

  int halvings = 0;
  while (run.iterations < opts.max_iter) {
    Vector v = run.w + run.alpha * apply_weighted_scatter(x, p, rho);
    if (previous.cols() > 0) v = project_out(std::move(v), previous);
    const double norm = v.norm();
    if (!(norm > 0.0)) throw InvalidInput("power step produced a zero vector");
    Vector w_next = v / norm;
    Vector p_next = project(x, w_next);
    const double f_next = tpca_objective_from_projections(as_span(p_next), rho);

    if (opts.backtracking && f_next < f) {
      if (++halvings > kMaxHalvings) {
        // No step of any size improves: stationary to working precision.
        run.converged = true;
        break;
      }
      run.alpha *= 0.5;
      ++run.backtracks;
      continue;
    }
    halvings = 0;
    ++run.iterations;
    const double step = (w_next - run.w).norm();
    run.w = std::move(w_next);
    p = std::move(p_next);
    f = f_next;
    run.trace.push_back(f);
    if (step <= opts.tol) {
      run.converged = true;
      break;
    }
  }
  run.objective = f;
  return run;
}

}  // namespace

void PowerOptions::validate() const {
  if (alpha && !(*alpha > 0.0)) throw InvalidInput("alpha must be positive");
  if (max_iter < 1) throw InvalidInput("max_iter must be positive");
  if (!(tol > 0.0)) throw InvalidInput("tol must be positive");
  if (restarts < 0) throw InvalidInput("restarts must be nonnegative");
}

Matrix weighted_scatter(const DataMatrix& x, const UnitVector& w, double rho) {
  require_rho(rho);
  const Vector p = project(x, w.vec());
  Vector weights(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const double denom = rho + p[i] * p[i];
    if (denom == 0.0) {
      throw SingularityError("weight 1/(rho + (x'w)^2) is singular", static_cast<std::size_t>(i));
    }
    weights[i] = 1.0 / denom;
  }
  return weighted_outer_sum(x, weights);
}

UnitVector power_init(const DataMatrix& x, double rho) {
  require_rho(rho);
  if (x.values().isZero(0.0)) throw InvalidInput("power_init: data matrix is all zero");
  Vector weights(static_cast<Eigen::Index>(x.n()));
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    const double denom = rho + x.values().row(i).squaredNorm();
    weights[i] = denom > 0.0 ? 1.0 / denom : 0.0;  // a zero row adds nothing either way
  }
  const auto eig = eigen_descending(weighted_outer_sum(x, weights));
  return UnitVector::normalized(eig.vectors.col(0));
}

UnitVector power_step(const DataMatrix& x, const UnitVector& w, double rho, double alpha) {
  require_rho(rho);
  if (!(alpha >= 0.0)) throw InvalidInput("alpha must be nonnegative");
  const Vector p = project(x, w.vec());
  const Vector v = w.vec() + alpha * apply_weighted_scatter(x, p, rho);
  const double norm = v.norm();
  if (!(norm > 0.0)) throw InvalidInput("power step produced a zero vector");
  return UnitVector(v / norm);
}

double kkt_residual(const DataMatrix& x, const UnitVector& w, double rho) {
  require_rho(rho);
  const Vector p = project(x, w.vec());
  const Vector aw = apply_weighted_scatter(x, p, rho);
  return (aw - w.vec().dot(aw) * w.vec()).norm();
}

DataMatrix deflate(const DataMatrix& x, const Vector& w) {
  if (static_cast<std::size_t>(w.size()) != x.d()) throw InvalidInput("deflate: dimension mismatch");
  Matrix v = x.values();
  simd::kernels().deflate_rows(v.data(), x.n(), x.d(), w.data());
  return DataMatrix(std::move(v), false);
}

FitReport fit_tpca_power(const DataMatrix& x, double rho, std::size_t r, const PowerOptions& opts) {
  require_rho(rho);
  opts.validate();
  if (!x.centered()) throw InvalidInput("fit_tpca_power: data must be centered");
  if (r < 1 || r > x.d()) throw InvalidInput("fit_tpca_power: need 1 <= r <= d");
  const double scale = scale_measure(x);
  if (!(scale > 0.0)) throw InvalidInput("fit_tpca_power: data matrix is all zero");
  const double rho_update = rho > 0.0 ? rho : 1e-12 * scale * scale;

  const auto d = static_cast<Eigen::Index>(x.d());
  GaussianRng rng(opts.seed);
  FitReport report;
  report.basis = Matrix::Zero(d, static_cast<Eigen::Index>(r));
  DataMatrix current(x.values(), false);

  for (std::size_t k = 0; k < r; ++k) {
    const Matrix previous = report.basis.leftCols(static_cast<Eigen::Index>(k));
    RunResult best;
    std::size_t best_index = 0;
    const bool exhausted = scale_measure(current) <= 1e-12 * scale;
    if (exhausted) {
      // Nothing left to fit: any complement direction is optimal.
      best.w = canonical_complement(d, previous);
      best.converged = true;
      const Vector p = project(current, best.w);
      best.objective = tpca_objective_from_projections(as_span(p), rho_update);
      best.trace.push_back(best.objective);
    } else {
      for (int s = 0; s <= opts.restarts; ++s) {
        Vector w0 = s == 0 ? power_init(current, rho).vec() : rng.unit_vector(d);
        w0 = project_out(std::move(w0), previous).normalized();
        RunResult run = run_power(current, w0, rho_update, previous, opts);
        if (s == 0 || run.objective > best.objective) {
          best = std::move(run);
          best_index = static_cast<std::size_t>(s);
        }
      }
    }

    ComponentFit fit;
    fit.direction = best.w;
    const Vector p = project(current, best.w);
    fit.objective = tpca_objective_from_projections(as_span(p), rho);
    fit.objective_trace = std::move(best.trace);
    fit.iterations = best.iterations;
    fit.converged = best.converged;
    fit.kkt_residual = kkt_residual(current, UnitVector::normalized(best.w), rho_update);
    fit.backtracks = best.backtracks;
    fit.final_alpha = best.alpha;
    fit.restart_index = best_index;

    report.basis.col(static_cast<Eigen::Index>(k)) = best.w;
    report.converged = report.converged && fit.converged;
    report.iterations += fit.iterations;
    report.components.push_back(std::move(fit));
    current = deflate(current, best.w);
  }

  report.basis = orthonormalize_columns(report.basis);
  for (Eigen::Index j = 0; j < report.basis.cols(); ++j) {
    Vector v = report.basis.col(j);
    apply_sign_convention(v);
    report.basis.col(j) = v;
    report.components[static_cast<std::size_t>(j)].direction = v;
  }
  Vector q = Vector::Zero(static_cast<Eigen::Index>(x.n()));
  for (Eigen::Index j = 0; j < report.basis.cols(); ++j) {
    q += project(x, report.basis.col(j)).cwiseAbs2();
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) total += std::log(rho + q[i]);
  report.basis_objective = total;
  return report;
}

}  // namespace infoproj
