#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "infoproj/data_model.hpp"
#include "infoproj/fit_report.hpp"

namespace infoproj {

struct PowerOptions {
  /// Step size. Unset: 1/lambda_max of the weighted scatter at the initial
  /// direction, halved whenever a step would decrease the objective.
  std::optional<double> alpha;
  int max_iter = 10000;
  double tol = 1e-8;  // on ||w_k - w_{k-1}||
  int restarts = 4;   // extra uniform-on-sphere starts
  std::uint64_t seed = 0;
  bool backtracking = true;

  void validate() const;
};

/// sum_i x_i x_i' / (rho + (x_i . w)^2). Throws SingularityError naming the row
/// when rho = 0 and x_i . w = 0.
Matrix weighted_scatter(const DataMatrix& x, const UnitVector& w, double rho);

/// Dominant eigenvector of sum_i x_i x_i' / (rho + x_i'x_i), signed like PCA.
UnitVector power_init(const DataMatrix& x, double rho);

/// w+ = normalize((I + alpha * weighted_scatter(x, w, rho)) w).
UnitVector power_step(const DataMatrix& x, const UnitVector& w, double rho, double alpha);

/// || A(w) w - (w'A(w)w) w ||, A = weighted_scatter. Zero at every stationary
/// point, including saddles and minima.
double kkt_residual(const DataMatrix& x, const UnitVector& w, double rho);

/// Maximizes sum_i log(rho + (x_i . w)^2) over unit w with the modified power
/// method, then deflates and repeats for r components.
///
/// rho = 0 is accepted: updates use rho_eff = 1e-12 * scale_measure(x)^2 while
/// the reported objective is the rho = 0 value.
FitReport fit_tpca_power(const DataMatrix& x, double rho, std::size_t r,
                         const PowerOptions& opts = {});

/// X (I - w w'), row by row.
DataMatrix deflate(const DataMatrix& x, const Vector& w);

}  // namespace infoproj
