#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "infoproj/types.hpp"

namespace infoproj {

/// One fitted direction. `objective` is the t-PCA objective on the data the
/// component was fitted to (the original data deflated by earlier components).
struct ComponentFit {
  Vector direction;
  double objective = 0.0;
  std::vector<double> objective_trace;
  int iterations = 0;
  bool converged = false;
  double kkt_residual = 0.0;
  int backtracks = 0;       // step halvings taken after an objective decrease
  double final_alpha = 0.0;
  std::size_t restart_index = 0;  // 0 = deterministic init, k >= 1 = k-th random restart
};

struct FitReport {
  Matrix basis;  // d x r, orthonormal columns
  std::vector<ComponentFit> components;
  double basis_objective = 0.0;  // sum_i log(rho + ||W'x_i||^2)
  bool converged = true;
  int iterations = 0;

  // Filled by the Fantope relaxation.
  std::optional<double> upper_bound;
  std::string bound_label;
  std::optional<double> certified_bound;
};

}  // namespace infoproj
