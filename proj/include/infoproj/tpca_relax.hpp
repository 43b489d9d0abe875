#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "infoproj/data_model.hpp"
#include "infoproj/fit_report.hpp"

namespace infoproj {

/// Symmetric M with 0 <= M <= I and trace(M) = r (eigenvalue slack 1e-9,
/// trace slack 1e-8). With the cap dropped (r = 1 path) only 0 <= M is checked.
class FantopeMatrix {
 public:
  FantopeMatrix(Matrix m, std::size_t r, bool capped = true);

  const Matrix& mat() const noexcept { return m_; }
  std::size_t r() const noexcept { return r_; }
  std::size_t d() const noexcept { return static_cast<std::size_t>(m_.rows()); }

 private:
  Matrix m_;
  std::size_t r_;
};

/// Frobenius-nearest point of the Fantope {trace M = r, 0 <= M <= I}: the
/// eigenvalues of A are shifted by a common theta and clipped to [0, 1].
/// With capped = false the upper clip is dropped (the r = 1 simplification).
FantopeMatrix fantope_project(const Matrix& a, std::size_t r, bool capped = true);

/// sum_i log(rho + x_i' M x_i); -inf when some rho + x_i'Mx_i <= 0.
double relax_objective(const DataMatrix& x, const Matrix& m, double rho);

/// sum_i x_i x_i' / (rho + x_i' M x_i).
Matrix relax_gradient(const DataMatrix& x, const Matrix& m, double rho);

/// max <G, F> over the Fantope: the sum of the r largest eigenvalues of G
/// (just the largest when uncapped with r = 1, which coincides).
double fantope_support(const Matrix& g, std::size_t r);

struct RelaxOptions {
  int max_iter = 20000;
  double tol = 1e-12;              // relative objective change
  std::optional<double> eta0;      // default 1 / sum_i ||x_i||^4 / rho^2
  bool drop_cap_for_rank_one = false;
  double converged_gap = 1e-6;     // relative duality gap for a "converged bound"

  void validate() const;
};

struct RelaxResult {
  FantopeMatrix m;
  FitReport report;
  std::vector<double> objective_trace;
  double objective = 0.0;
  double duality_gap = 0.0;            // max_F <grad, F - M> >= optimum - objective
  double gradient_mapping_norm = 0.0;  // ||P(M + eta grad) - M||_F / eta at the last eta
  double final_eta = 0.0;
  int backtracks = 0;
  bool basis_tie = false;
};

/// Projected gradient ascent on the convex relaxation, starting from (r/d) I.
/// The relaxed optimum bounds the t-PCA objective of every rank-r basis.
RelaxResult solve_relaxation(const DataMatrix& x, double rho, std::size_t r,
                             const RelaxOptions& opts = {});

struct ExtractedBasis {
  OrthonormalBasis basis;
  bool tie = false;  // eigenvalues r and r+1 coincide
};

/// r dominant eigenvectors of M, canonical signs and tie-breaking.
ExtractedBasis extract_basis(const Matrix& m, std::size_t r);

struct FeasibilityDiagnostics {
  double symmetry_violation = 0.0;  // max |M - M'|
  double trace_violation = 0.0;     // |trace M - r|
  double psd_violation = 0.0;       // max(0, -lambda_min)
  double cap_violation = 0.0;       // max(0, lambda_max - 1)
  double rank_violation = 0.0;      // distance of the spectrum from {1 x r, 0 x (d - r)}
  Vector eigenvalues;               // descending
  bool feasible = false;            // relaxed constraints within tol
  bool rank_ok = false;             // rank-r projection spectrum within tol
};

FeasibilityDiagnostics feasibility_check(const Matrix& m, std::size_t r, double tol);

}  // namespace infoproj
