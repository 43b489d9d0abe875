#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "infoproj/errors.hpp"
#include "infoproj/linalg.hpp"
#include "infoproj/oracle.hpp"
#include "infoproj/pca.hpp"
#include "infoproj/sic_index.hpp"

using namespace infoproj;
using infoproj::testing::rows;

TEST_CASE("scatter examples") {
  Matrix s = scatter(DataMatrix(rows({{1, 0}, {-1, 0}})));
  CHECK(s(0, 0) == 2.0);
  CHECK(s(0, 1) == 0.0);
  CHECK(s(1, 1) == 0.0);
  s = scatter(DataMatrix(rows({{1, 1}})));
  CHECK(s == Matrix::Ones(2, 2));

  const DataMatrix x = testing::random_data(1, 20, 4);
  Matrix flipped = x.values().colwise().reverse();
  const Matrix s1 = scatter(x);
  const Matrix s2 = scatter(DataMatrix(flipped));
  CHECK((s1 - s2).cwiseAbs().maxCoeff() <= 1e-12 * s1.cwiseAbs().maxCoeff());
  CHECK(s1 == s1.transpose());
  CHECK((s1 - x.values().transpose() * x.values()).norm() <= 1e-12 * s1.norm());
}

TEST_CASE("weighted_outer_sum") {
  const DataMatrix x(rows({{1, 2}, {3, -1}}));
  Vector wt(2);
  wt << 0.5, 2.0;
  const Matrix a = weighted_outer_sum(x, wt);
  CHECK(a(0, 0) == doctest::Approx(0.5 + 18.0));
  CHECK(a(0, 1) == doctest::Approx(1.0 - 6.0));
  CHECK(a(1, 0) == a(0, 1));
  CHECK(a(1, 1) == doctest::Approx(2.0 + 2.0));
  CHECK_THROWS_AS(weighted_outer_sum(x, Vector::Ones(3)), InvalidInput);
}

TEST_CASE("top_components examples") {
  const DataMatrix x(rows({{2, 0}, {-2, 0}, {0, 1}, {0, -1}}), true);
  const auto one = top_components(x, 1);
  CHECK(one.basis.mat().col(0).isApprox(Vector::Unit(2, 0)));
  CHECK(one.eigenvalues[0] == doctest::Approx(8.0));

  const auto both = top_components(x, 2);
  CHECK(both.eigenvalues[0] == doctest::Approx(8.0));
  CHECK(both.eigenvalues[1] == doctest::Approx(2.0));
  CHECK((both.basis.mat().cwiseAbs() - Matrix::Identity(2, 2)).norm() <= 1e-12);

  CHECK_THROWS_AS(top_components(x, 3), InvalidInput);
  CHECK_THROWS_AS(top_components(x, 0), InvalidInput);
}

TEST_CASE("top direction beats random probes") {
  GaussianRng rng(77);
  for (int k = 0; k < 5; ++k) {
    const DataMatrix x = testing::random_data(300 + k, 60, 6);
    const Matrix s = scatter(x);
    const Vector w = top_components(x, 1).basis.mat().col(0);
    const double best = w.dot(s * w);
    for (int t = 0; t < 1000; ++t) {
      const Vector v = rng.unit_vector(6);
      CHECK(v.dot(s * v) <= best + 1e-9 * best);
    }
  }
}

TEST_CASE("trace of top-r block equals the eigenvalue sum, rotation invariant") {
  GaussianRng rng(78);
  const DataMatrix x = testing::random_data(400, 50, 6);
  const Matrix s = scatter(x);
  const auto pcs = top_components(x, 3);
  const Matrix w = pcs.basis.mat();
  const double tr = (w.transpose() * s * w).trace();
  CHECK(std::abs(tr - pcs.eigenvalues.sum()) <= 1e-9 * tr);
  const Matrix q = testing::random_orthonormal(rng, 3, 3);
  const Matrix wq = w * q;
  CHECK(std::abs((wq.transpose() * s * wq).trace() - tr) <= 1e-9 * tr);
  CHECK(validate_orthonormal(w, 1e-12).ok);
}

TEST_CASE("sign convention and determinism") {
  const DataMatrix x = testing::random_data(500, 40, 5);
  const auto a = top_components(x, 5);
  const auto b = top_components(x, 5);
  CHECK(a.basis.mat() == b.basis.mat());
  for (Eigen::Index j = 0; j < 5; ++j) {
    Eigen::Index idx;
    a.basis.mat().col(j).cwiseAbs().maxCoeff(&idx);
    CHECK(a.basis.mat()(idx, j) > 0.0);
  }
}

TEST_CASE("degenerate eigenvalues resolve to the standard basis") {
  const DataMatrix x(rows({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), true);
  const auto pcs = top_components(x, 2);
  CHECK(pcs.had_ties);
  CHECK(pcs.basis.mat().isApprox(Matrix::Identity(2, 2)));
}

TEST_CASE("PCA direction maximizes the Gaussian SIC on a 2-D grid") {
  const DataMatrix x = testing::random_data(600, 80, 2);
  const Vector w = top_components(x, 1).basis.mat().col(0);
  const double at_pca = sic_gaussian_1d(x, UnitVector(w), 1.0, 1.0).total;
  double best = -1e300;
  Vector best_w;
  for (int k = 0; k < 20000; ++k) {
    const double t = M_PI * k / 20000.0;
    Vector v(2);
    v << std::cos(t), std::sin(t);
    const double s = sic_gaussian_1d(x, UnitVector(v), 1.0, 1.0).total;
    if (s > best) {
      best = s;
      best_w = v;
    }
  }
  CHECK(at_pca >= best - 1e-9 * std::abs(best));
  CHECK(line_angle(best_w, w) <= M_PI / 20000.0);
}
