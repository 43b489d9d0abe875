#include "infoproj/tpca_relax.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "infoproj/errors.hpp"
#include "infoproj/linalg.hpp"
#include "infoproj/pca.hpp"
#include "infoproj/sic_index.hpp"
#include "infoproj/simd/kernels.hpp"
#include "infoproj/tpca_power.hpp"

namespace infoproj {
namespace {

constexpr int kMaxHalvings = 60;

Vector quadratic_forms(const DataMatrix& x, const Matrix& m) {
  if (static_cast<std::size_t>(m.rows()) != x.d() || m.rows() != m.cols()) {
    throw InvalidInput("M must be d x d");
  }
  Vector q(static_cast<Eigen::Index>(x.n()));
  simd::kernels().quadratic_forms(x.data(), x.n(), x.d(), m.data(), q.data());
  return q;
}

double objective_from_forms(const Vector& q, double rho) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    const double arg = rho + q[i];
    if (!(arg > 0.0)) return -std::numeric_limits<double>::infinity();
    sum += std::log(arg);
  }
  return sum;
}

Matrix symmetrize(const Matrix& a) { return 0.5 * (a + a.transpose()); }

// sum_i clip(lambda_i - theta, 0, cap)
double clipped_sum(const Vector& lambda, double theta, bool capped) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    double v = std::max(lambda[i] - theta, 0.0);
    if (capped) v = std::min(v, 1.0);
    s += v;
  }
  return s;
}

}  // namespace

FantopeMatrix::FantopeMatrix(Matrix m, std::size_t r, bool capped) : m_(std::move(m)), r_(r) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) throw InvalidInput("Fantope matrix must be square");
  if (r_ < 1 || r_ > d()) throw InvalidInput("Fantope rank must satisfy 1 <= r <= d");
  const auto diag = feasibility_check(m_, r_, 1e-9);
  if (diag.trace_violation > 1e-8 || diag.psd_violation > 1e-9 ||
      (capped && diag.cap_violation > 1e-9) || diag.symmetry_violation > 1e-9) {
    throw InvalidInput("matrix is outside the Fantope");
  }
}

FantopeMatrix fantope_project(const Matrix& a, std::size_t r, bool capped) {
  if (a.rows() != a.cols() || a.rows() < 1) throw InvalidInput("fantope_project: square matrix required");
  if (!a.allFinite()) throw InvalidInput("fantope_project: non-finite entry");
  const auto d = static_cast<std::size_t>(a.rows());
  if (r < 1 || r > d) throw InvalidInput("fantope_project: need 1 <= r <= d");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetrize(a));
  if (solver.info() != Eigen::Success) throw InvalidInput("fantope_project: eigensolver failed");
  const Vector lambda = solver.eigenvalues();
  const double target = static_cast<double>(r);

  // clipped_sum is nonincreasing in theta; bracket so that sum(lo) >= r >= sum(hi).
  double lo = lambda.minCoeff() - (capped ? 1.0 : target);
  double hi = lambda.maxCoeff();
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (clipped_sum(lambda, mid, capped) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double theta = 0.5 * (lo + hi);

  // The sum is linear in theta between breakpoints: solve exactly on the
  // active piece so the trace is met to rounding.
  double fixed = 0.0;
  double active_sum = 0.0;
  int active = 0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double v = lambda[i] - theta;
    if (capped && v >= 1.0) {
      fixed += 1.0;
    } else if (v > 0.0) {
      active_sum += lambda[i];
      ++active;
    }
  }
  if (active > 0) {
    const double exact = (active_sum + fixed - target) / active;
    if (std::abs(clipped_sum(lambda, exact, capped) - target) <
        std::abs(clipped_sum(lambda, theta, capped) - target)) {
      theta = exact;
    }
  }

  Vector clipped(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    double v = std::max(lambda[i] - theta, 0.0);
    if (capped) v = std::min(v, 1.0);
    clipped[i] = v;
  }
  const Eigen::MatrixXd& q = solver.eigenvectors();
  Matrix m = symmetrize(q * clipped.asDiagonal() * q.transpose());
  return FantopeMatrix(std::move(m), r, capped);
}

double relax_objective(const DataMatrix& x, const Matrix& m, double rho) {
  if (!(rho >= 0.0)) throw InvalidInput("rho must be nonnegative");
  return objective_from_forms(quadratic_forms(x, m), rho);
}

Matrix relax_gradient(const DataMatrix& x, const Matrix& m, double rho) {
  if (!(rho >= 0.0)) throw InvalidInput("rho must be nonnegative");
  const Vector q = quadratic_forms(x, m);
  Vector weights(q.size());
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    const double arg = rho + q[i];
    if (!(arg > 0.0)) {
      throw SingularityError("relaxation gradient weight is singular", static_cast<std::size_t>(i));
    }
    weights[i] = 1.0 / arg;
  }
  return weighted_outer_sum(x, weights);
}

double fantope_support(const Matrix& g, std::size_t r) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetrize(g), Eigen::EigenvaluesOnly);
  const Vector lambda = solver.eigenvalues();  // ascending
  double s = 0.0;
  for (std::size_t k = 0; k < r; ++k) s += lambda[lambda.size() - 1 - static_cast<Eigen::Index>(k)];
  return s;
}

void RelaxOptions::validate() const {
  if (max_iter < 1) throw InvalidInput("max_iter must be positive");
  if (!(tol > 0.0)) throw InvalidInput("tol must be positive");
  if (eta0 && !(*eta0 > 0.0)) throw InvalidInput("eta0 must be positive");
}

RelaxResult solve_relaxation(const DataMatrix& x, double rho, std::size_t r,
                             const RelaxOptions& opts) {
  opts.validate();
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidInput("solve_relaxation requires rho > 0");
  if (!x.centered()) throw InvalidInput("solve_relaxation: data must be centered");
  const std::size_t d = x.d();
  if (r < 1 || r > d) throw InvalidInput("solve_relaxation: need 1 <= r <= d");
  const bool capped = !(opts.drop_cap_for_rank_one && r == 1);

  double eta = 0.0;
  if (opts.eta0) {
    eta = *opts.eta0;
  } else {
    double lipschitz = 0.0;
    for (Eigen::Index i = 0; i < x.values().rows(); ++i) {
      const double s = x.values().row(i).squaredNorm();
      lipschitz += s * s;
    }
    lipschitz /= rho * rho;
    eta = lipschitz > 0.0 ? 1.0 / lipschitz : 1.0;
  }

  const auto dd = static_cast<Eigen::Index>(d);
  Matrix m = (static_cast<double>(r) / static_cast<double>(d)) * Matrix::Identity(dd, dd);
  double f = relax_objective(x, m, rho);
  std::vector<double> trace{f};
  int iterations = 0;
  int backtracks = 0;
  bool converged = false;

  while (iterations < opts.max_iter) {
    const Matrix g = relax_gradient(x, m, rho);
    bool accepted = false;
    Matrix m_next;
    double f_next = f;
    for (int h = 0; h <= kMaxHalvings; ++h) {
      m_next = fantope_project(m + eta * g, r, capped).mat();
      const Matrix step = m_next - m;
      f_next = relax_objective(x, m_next, rho);
      // Sufficient ascent for a 1/eta-smooth concave objective.
      const double model = f + (g.cwiseProduct(step)).sum() - step.squaredNorm() / (2.0 * eta);
      if (f_next >= model && f_next >= f) {
        accepted = true;
        break;
      }
      eta *= 0.5;
      ++backtracks;
    }
    if (!accepted) {
      converged = true;  // no admissible step: stationary to working precision
      break;
    }
    ++iterations;
    const double change = f_next - f;
    m = std::move(m_next);
    f = f_next;
    trace.push_back(f);
    const double scale = std::max(1.0, std::abs(f));
    if (change <= opts.tol * scale) {
      // A small change can also come from a step size still ramping up from
      // eta0, so stalls only count once the duality gap agrees.
      const Matrix g_now = relax_gradient(x, m, rho);
      const double gap_now = fantope_support(g_now, r) - (g_now.cwiseProduct(m)).sum();
      if (gap_now <= opts.converged_gap * scale) {
        converged = true;
        break;
      }
    }
    eta *= 2.0;
  }

  const Matrix g = relax_gradient(x, m, rho);
  const double gap = std::max(0.0, fantope_support(g, r) - (g.cwiseProduct(m)).sum());
  const double mapping =
      (fantope_project(m + eta * g, r, capped).mat() - m).norm() / eta;

  RelaxResult result{FantopeMatrix(m, r, capped), FitReport{}, std::move(trace), f, gap, mapping,
                     eta, backtracks, false};

  const auto extracted = extract_basis(m, r);
  result.basis_tie = extracted.tie;
  FitReport& report = result.report;
  report.basis = extracted.basis.mat();
  report.converged = converged;
  report.iterations = iterations;
  report.upper_bound = f;
  report.certified_bound = f + gap;
  report.bound_label =
      gap <= opts.converged_gap * std::max(1.0, std::abs(f)) ? "converged bound" : "heuristic bound";

  DataMatrix current(x.values(), false);
  for (Eigen::Index j = 0; j < report.basis.cols(); ++j) {
    ComponentFit fit;
    fit.direction = report.basis.col(j);
    const UnitVector w(fit.direction);
    fit.objective = tpca_objective(current, w, rho);
    fit.iterations = iterations;
    fit.converged = converged;
    fit.kkt_residual = kkt_residual(current, w, rho);
    report.components.push_back(std::move(fit));
    current = deflate(current, report.basis.col(j));
  }
  Matrix projector = report.basis * report.basis.transpose();
  report.basis_objective = relax_objective(x, projector, rho);
  return result;
}

ExtractedBasis extract_basis(const Matrix& m, std::size_t r) {
  const auto d = static_cast<std::size_t>(m.rows());
  if (r < 1 || r > d) throw InvalidInput("extract_basis: need 1 <= r <= d");
  const auto eig = eigen_descending(m);
  const auto rr = static_cast<Eigen::Index>(r);
  bool tie = false;
  if (r < d) {
    const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
    tie = eig.values[rr - 1] - eig.values[rr] <= 1e-10 * scale;
  }
  return {OrthonormalBasis(eig.vectors.leftCols(rr)), tie};
}

FeasibilityDiagnostics feasibility_check(const Matrix& m, std::size_t r, double tol) {
  if (m.rows() != m.cols() || m.rows() < 1) throw InvalidInput("feasibility_check: square matrix required");
  FeasibilityDiagnostics diag;
  diag.symmetry_violation = (m - m.transpose()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetrize(m), Eigen::EigenvaluesOnly);
  diag.eigenvalues = solver.eigenvalues().reverse();
  const Vector& lambda = diag.eigenvalues;
  diag.trace_violation = std::abs(m.trace() - static_cast<double>(r));
  diag.psd_violation = std::max(0.0, -lambda.minCoeff());
  diag.cap_violation = std::max(0.0, lambda.maxCoeff() - 1.0);
  double rank = 0.0;
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    const double target = static_cast<std::size_t>(k) < r ? 1.0 : 0.0;
    rank = std::max(rank, std::abs(lambda[k] - target));
  }
  diag.rank_violation = rank;
  diag.feasible = diag.symmetry_violation <= tol && diag.trace_violation <= tol &&
                  diag.psd_violation <= tol && diag.cap_violation <= tol;
  diag.rank_ok = diag.rank_violation <= tol;
  return diag;
}

}  // namespace infoproj
