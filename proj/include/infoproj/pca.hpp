#pragma once

#include <cstddef>

#include "infoproj/data_model.hpp"

namespace infoproj {

/// X'X accumulated as a sum of outer products; exactly symmetric.
Matrix scatter(const DataMatrix& x);

/// sum_i weight_i x_i x_i', symmetric. Shared by PCA, t-PCA and the relaxation.
Matrix weighted_outer_sum(const DataMatrix& x, const Vector& weights);

struct PrincipalComponents {
  OrthonormalBasis basis;
  Vector eigenvalues;  // descending, length r
  bool had_ties = false;
};

/// The r dominant eigenvectors of X'X. These maximize the Gaussian-prior SIC
/// for any sigma and fixed resolution.
PrincipalComponents top_components(const DataMatrix& x, std::size_t r);

}  // namespace infoproj
