#pragma once

#include <Eigen/Core>

namespace infoproj {

// Row-major throughout: rows of a data matrix are points and the SIMD kernels
// walk them contiguously.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

}  // namespace infoproj
