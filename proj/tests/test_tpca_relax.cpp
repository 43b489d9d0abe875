#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "infoproj/errors.hpp"
#include "infoproj/linalg.hpp"
#include "infoproj/sic_index.hpp"
#include "infoproj/tpca_power.hpp"
#include "infoproj/tpca_relax.hpp"

using namespace infoproj;
using infoproj::testing::rows;

namespace {

// Random point of the Fantope: random eigenvectors, spectrum a random convex
// combination of (r/d, ..., r/d) and two vertices with r ones.
Matrix random_feasible(GaussianRng& rng, Eigen::Index d, std::size_t r) {
  const Matrix q = testing::random_orthonormal(rng, d, d);
  const auto vertex = [&] {
    Vector v = Vector::Zero(d);
    std::size_t placed = 0;
    while (placed < r) {
      const auto i = static_cast<Eigen::Index>(rng.uniform() * static_cast<double>(d)) % d;
      if (v[i] == 0.0) {
        v[i] = 1.0;
        ++placed;
      }
    }
    return v;
  };
  double a = rng.uniform(), b = rng.uniform(), c = rng.uniform();
  const double total = a + b + c;
  const Vector lambda = (a / total) * Vector::Constant(d, static_cast<double>(r) / static_cast<double>(d)) +
                        (b / total) * vertex() + (c / total) * vertex();
  return q * lambda.asDiagonal() * q.transpose();
}

DataMatrix line3(const Vector& dir) {
  Matrix x(6, 3);
  for (int i = 0; i < 3; ++i) {
    x.row(2 * i) = (i + 1.0) * dir.transpose();
    x.row(2 * i + 1) = -(i + 0.5) * dir.transpose();
  }
  return center(DataMatrix(x));
}

}  // namespace

TEST_CASE("FantopeMatrix validation") {
  CHECK_NOTHROW(FantopeMatrix(Matrix::Identity(3, 3) / 3.0, 1));
  CHECK_THROWS_AS(FantopeMatrix(Matrix::Identity(3, 3), 1), InvalidInput);
  Matrix over = Matrix::Zero(2, 2);
  over(0, 0) = 1.5;
  over(1, 1) = -0.5;
  CHECK_THROWS_AS(FantopeMatrix(over, 1), InvalidInput);
  Matrix tall = Matrix::Zero(2, 2);
  tall(0, 0) = 1.2;
  tall(1, 1) = 0.8;
  CHECK_THROWS_AS(FantopeMatrix(tall, 2), InvalidInput);
  tall(1, 1) = -0.2;
  CHECK_THROWS_AS(FantopeMatrix(tall, 1), InvalidInput);
  CHECK_THROWS_AS(FantopeMatrix(Matrix::Identity(2, 2), 3), InvalidInput);
}

TEST_CASE("fantope_project analytic cases") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 2.0;
  Matrix m = fantope_project(a, 1).mat();
  CHECK(std::abs(m(0, 0) - 1.0) <= 1e-12);
  CHECK(std::abs(m(1, 1)) <= 1e-12);
  CHECK(std::abs(m(0, 1)) <= 1e-12);

  const Matrix b = 0.8 * Matrix::Identity(2, 2);
  m = fantope_project(b, 1).mat();
  CHECK((m - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
  // brute force over the diagonal feasible family diag(t, 1 - t)
  double best_t = -1.0;
  double best = 1e300;
  for (int k = 0; k <= 100000; ++k) {
    const double t = k / 100000.0;
    const double dist = std::pow(0.8 - t, 2) + std::pow(0.8 - (1.0 - t), 2);
    if (dist < best) {
      best = dist;
      best_t = t;
    }
  }
  CHECK(std::abs(best_t - m(0, 0)) <= 1e-5);
  CHECK((b - m).squaredNorm() <= best + 1e-12);
}

TEST_CASE("fantope_project is idempotent") {
  GaussianRng rng(1);
  for (int k = 0; k < 50; ++k) {
    const Eigen::Index d = 2 + k % 5;
    const std::size_t r = 1 + static_cast<std::size_t>(k) % static_cast<std::size_t>(d);
    const Matrix f = random_feasible(rng, d, r);
    CHECK((fantope_project(f, r).mat() - f).cwiseAbs().maxCoeff() <= 1e-10);
    const Matrix p = fantope_project(5.0 * testing::random_symmetric(rng, d), r).mat();
    CHECK((fantope_project(p, r).mat() - p).cwiseAbs().maxCoeff() <= 1e-10);
    const auto diag = feasibility_check(p, r, 1e-10);
    CHECK(diag.feasible);
  }
}

TEST_CASE("fantope_project is the nearest feasible point") {
  GaussianRng rng(2);
  for (int k = 0; k < 10; ++k) {
    const Eigen::Index d = 2 + k % 4;
    const std::size_t r = 1 + static_cast<std::size_t>(k) % static_cast<std::size_t>(d);
    const Matrix a = 2.0 * testing::random_symmetric(rng, d);
    const double dp = (a - fantope_project(a, r).mat()).norm();
    for (int t = 0; t < 100; ++t) CHECK(dp <= (a - random_feasible(rng, d, r)).norm() + 1e-10);
  }
}

TEST_CASE("uncapped projection for r = 1") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 3.0;
  a(1, 1) = 1.0;
  const Matrix m = fantope_project(a, 1, false).mat();
  CHECK(std::abs(m(0, 0) - 1.0) <= 1e-12);
  CHECK(std::abs(m(1, 1)) <= 1e-12);
  CHECK_THROWS_AS(fantope_project(Matrix::Zero(2, 3), 1), InvalidInput);
  CHECK_THROWS_AS(fantope_project(Matrix::Zero(2, 2), 3), InvalidInput);
}

TEST_CASE("relax objective and gradient examples") {
  GaussianRng rng(3);
  const DataMatrix x = testing::random_data(4, 30, 4);
  const Vector w = rng.unit_vector(4);
  const Matrix ww = w * w.transpose();
  CHECK(std::abs(relax_objective(x, ww, 0.7) - tpca_objective(x, UnitVector(w), 0.7)) <= 1e-12 * 30);
  CHECK((relax_gradient(x, ww, 0.7) - weighted_scatter(x, UnitVector(w), 0.7)).norm() <= 1e-12 * 30);

  double expected = 0.0;
  for (Eigen::Index i = 0; i < 30; ++i) expected += std::log(0.7 + x.values().row(i).squaredNorm());
  CHECK(std::abs(relax_objective(x, Matrix::Identity(4, 4), 0.7) - expected) <= 1e-12 * std::abs(expected));

  const DataMatrix pair(rows({{1, 0}, {-1, 0}}));
  Matrix e2 = Matrix::Zero(2, 2);
  e2(1, 1) = 1.0;
  CHECK(relax_objective(pair, e2, 0.0) == -INFINITY);
  CHECK_THROWS_AS(relax_gradient(pair, e2, 0.0), SingularityError);
  CHECK_THROWS_AS(relax_objective(pair, Matrix::Identity(3, 3), 1.0), InvalidInput);
}

TEST_CASE("relax gradient matches central differences") {
  GaussianRng rng(4);
  for (int k = 0; k < 5; ++k) {
    const DataMatrix x = testing::random_data(10 + k, 20, 3);
    const Matrix m = random_feasible(rng, 3, 1);
    const double rho = 0.3 + rng.uniform();
    const Matrix g = relax_gradient(x, m, rho);
    for (int t = 0; t < 5; ++t) {
      const Matrix e = testing::random_symmetric(rng, 3);
      const double h = 1e-5;
      const double fd = (relax_objective(x, m + h * e, rho) - relax_objective(x, m - h * e, rho)) / (2 * h);
      const double an = g.cwiseProduct(e).sum();
      CHECK(std::abs(fd - an) <= 1e-5 * std::max(1.0, std::abs(an)));
    }
  }
}

TEST_CASE("relaxation is tight on rank-one data") {
  Vector dir(3);
  dir << 1.0, 2.0, -2.0;
  dir /= 3.0;
  const DataMatrix x = line3(dir);
  const RelaxResult res = solve_relaxation(x, 0.5, 1);
  CHECK(res.report.converged);
  CHECK(line_angle(res.report.basis.col(0), dir) <= 1e-6);
  CHECK(std::abs(res.objective - tpca_objective(x, UnitVector(dir), 0.5)) <= 1e-6);
  CHECK((res.m.mat() - dir * dir.transpose()).cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("r = d forces the identity") {
  const DataMatrix x = testing::random_data(20, 15, 3);
  const RelaxResult res = solve_relaxation(x, 1.0, 3);
  CHECK((res.m.mat() - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(std::abs(res.objective - relax_objective(x, Matrix::Identity(3, 3), 1.0)) <= 1e-10);
}

TEST_CASE("relaxation bounds every unit vector and the power method") {
  GaussianRng rng(5);
  for (int k = 0; k < 3; ++k) {
    const DataMatrix x = testing::random_data(30 + k, 40, 4);
    const double rho = 0.2;
    const RelaxResult res = solve_relaxation(x, rho, 1);
    CHECK(res.report.converged);
    CHECK(res.report.bound_label == "converged bound");
    const FitReport power = fit_tpca_power(x, rho, 1);
    CHECK(res.objective >= power.components[0].objective - 1e-8);
    for (int t = 0; t < 1000; ++t) {
      CHECK(res.objective >= tpca_objective(x, UnitVector(rng.unit_vector(4)), rho) - 1e-8);
    }
    CHECK(*res.report.certified_bound >= res.objective);
    CHECK(res.duality_gap >= 0.0);
  }
}

TEST_CASE("objective trace ascends") {
  for (int k = 0; k < 5; ++k) {
    const DataMatrix x = testing::random_data(40 + k, 30, 5);
    const RelaxResult res = solve_relaxation(x, 0.05, 1 + static_cast<std::size_t>(k) % 3);
    for (std::size_t i = 1; i < res.objective_trace.size(); ++i) {
      CHECK(res.objective_trace[i] >= res.objective_trace[i - 1] - 1e-12);
    }
  }
}

TEST_CASE("dropping the cap at r = 1 gives the same solution") {
  for (int k = 0; k < 5; ++k) {
    const DataMatrix x = testing::random_data(50 + k, 30, 4);
    RelaxOptions uncapped;
    uncapped.drop_cap_for_rank_one = true;
    const RelaxResult a = solve_relaxation(x, 0.5, 1);
    const RelaxResult b = solve_relaxation(x, 0.5, 1, uncapped);
    CHECK(std::abs(a.objective - b.objective) <= 1e-8 * std::max(1.0, std::abs(a.objective)));
    CHECK((a.m.mat() - b.m.mat()).cwiseAbs().maxCoeff() <= 1e-6);
  }
}

TEST_CASE("rank-r data: extracted basis spans the data") {
  GaussianRng rng(6);
  const Matrix u = testing::random_orthonormal(rng, 5, 2);
  Matrix coeff(40, 2);
  for (Eigen::Index i = 0; i < 40; ++i) coeff.row(i) << rng.normal(), 2.0 * rng.normal();
  const DataMatrix x = center(DataMatrix(coeff * u.transpose()));
  const RelaxResult res = solve_relaxation(x, 0.1, 2);
  CHECK(subspace_angle(res.report.basis, u) <= 1e-6);
}

TEST_CASE("solve_relaxation preconditions") {
  const DataMatrix x = testing::random_data(60, 10, 3);
  CHECK_THROWS_AS(solve_relaxation(x, 0.0, 1), InvalidInput);
  CHECK_THROWS_AS(solve_relaxation(x, 1.0, 4), InvalidInput);
  CHECK_THROWS_AS(solve_relaxation(DataMatrix(rows({{1, 2}, {2, 2}})), 1.0, 1), InvalidInput);
  RelaxOptions bad;
  bad.max_iter = 0;
  CHECK_THROWS_AS(solve_relaxation(x, 1.0, 1, bad), InvalidInput);
  RelaxOptions short_run;
  short_run.max_iter = 1;
  short_run.eta0 = 1e-12;
  const RelaxResult res = solve_relaxation(x, 1.0, 1, short_run);
  CHECK_FALSE(res.report.converged);
  CHECK(res.report.bound_label == "heuristic bound");
}

TEST_CASE("extract_basis examples") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  auto e = extract_basis(m, 1);
  CHECK(e.basis.mat().col(0) == Vector::Unit(2, 0));
  CHECK_FALSE(e.tie);

  GaussianRng rng(7);
  const Vector w = rng.unit_vector(4);
  e = extract_basis(w * w.transpose(), 1);
  CHECK(line_angle(e.basis.mat().col(0), w) <= 1e-12);

  e = extract_basis(0.5 * Matrix::Identity(2, 2), 1);
  CHECK(e.tie);
  CHECK(e.basis.mat().col(0) == Vector::Unit(2, 0));
}

TEST_CASE("feasibility_check examples") {
  GaussianRng rng(8);
  const Matrix w = testing::random_orthonormal(rng, 5, 2);
  auto diag = feasibility_check(w * w.transpose(), 2, 1e-10);
  CHECK(diag.feasible);
  CHECK(diag.rank_ok);

  diag = feasibility_check(0.5 * Matrix::Identity(2, 2), 1, 1e-10);
  CHECK(diag.feasible);
  CHECK_FALSE(diag.rank_ok);
  CHECK(std::abs(diag.rank_violation - 0.5) <= 1e-12);

  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 1) = 0.1;
  diag = feasibility_check(bad, 1, 1e-10);
  CHECK_FALSE(diag.feasible);
  CHECK(std::abs(diag.symmetry_violation - 0.1) <= 1e-15);
  CHECK(std::abs(diag.trace_violation - 1.0) <= 1e-15);
}

TEST_CASE("feasible rank-r spectra reconstruct as W W'") {
  GaussianRng rng(9);
  for (int k = 0; k < 20; ++k) {
    const Eigen::Index d = 2 + k % 5;
    const std::size_t r = 1 + static_cast<std::size_t>(k) % static_cast<std::size_t>(d);
    const Matrix q = testing::random_orthonormal(rng, d, d);
    Vector lambda = Vector::Zero(d);
    for (std::size_t j = 0; j < r; ++j) lambda[static_cast<Eigen::Index>(j)] = 1.0 + 1e-10 * rng.normal();
    const Matrix m = q * lambda.asDiagonal() * q.transpose();
    const auto diag = feasibility_check(m, r, 1e-8);
    REQUIRE(diag.rank_ok);
    const Matrix w = extract_basis(m, r).basis.mat();
    CHECK((m - w * w.transpose()).cwiseAbs().maxCoeff() <= 1e-7);
  }
}
