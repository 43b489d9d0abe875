#include "infoproj/pca.hpp"

#include "infoproj/errors.hpp"
#include "infoproj/linalg.hpp"
#include "infoproj/simd/kernels.hpp"

namespace infoproj {

Matrix weighted_outer_sum(const DataMatrix& x, const Vector& weights) {
  if (static_cast<std::size_t>(weights.size()) != x.n()) {
    throw InvalidInput("one weight per data row required");
  }
  const auto d = static_cast<Eigen::Index>(x.d());
  Matrix a = Matrix::Zero(d, d);
  simd::kernels().accumulate_weighted_outer(x.data(), x.n(), x.d(), weights.data(), a.data());
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < j; ++k) a(j, k) = a(k, j);
  }
  return a;
}

Matrix scatter(const DataMatrix& x) {
  return weighted_outer_sum(x, Vector::Ones(static_cast<Eigen::Index>(x.n())));
}

PrincipalComponents top_components(const DataMatrix& x, std::size_t r) {
  if (r < 1 || r > x.d()) throw InvalidInput("top_components: need 1 <= r <= d");
  const auto eig = eigen_descending(scatter(x));
  const auto rr = static_cast<Eigen::Index>(r);
  return {OrthonormalBasis(eig.vectors.leftCols(rr)), eig.values.head(rr), eig.had_ties};
}

}  // namespace infoproj
