#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "infoproj/data_model.hpp"

namespace infoproj {

/// Entries are exactly +1 or -1.
using SignVector = std::vector<std::int8_t>;

/// Cover's count of homogeneously linearly separable dichotomies of n points
/// in general position in R^d: 2 * sum_{k<d} C(n-1, k). Throws OutOfRange for
/// n > 60.
std::uint64_t cover_count(std::size_t n, std::size_t d);

struct DichotomySet {
  std::vector<SignVector> signs;
  std::vector<Vector> witnesses;  // witnesses[k] realizes signs[k]
  bool degenerate = false;        // some rows parallel: fewer cells than Cover's count
};

/// Every sign pattern sign(Xw) over unit w in R^2 with no zero projection, by an
/// angular sweep. One witness per open cell, at the midpoint between
/// consecutive critical angles.
DichotomySet enumerate_dichotomies_2d(const DataMatrix& x);

struct GridOptimum {
  UnitVector w;
  double objective;
};

/// Brute-force maximizer of the t-PCA objective for d in {2, 3}. d = 2 uses
/// `resolution` angles k*pi/resolution; d = 3 a Fibonacci lattice of
/// `resolution` points on the upper hemisphere. Ties go to the lowest index.
GridOptimum grid_best_w(const DataMatrix& x, double rho, std::size_t resolution);

}  // namespace infoproj
