#include "infoproj/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <vector>

#include "infoproj/errors.hpp"

namespace infoproj {
namespace {

// Replace the columns of `cluster` (an orthonormal basis of an eigenspace) by
// a basis that depends only on the eigenspace itself.
Matrix canonical_cluster_basis(const Matrix& cluster) {
  const Eigen::Index d = cluster.rows();
  const Eigen::Index m = cluster.cols();
  Matrix out(d, m);
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  for (Eigen::Index k = 0; k < m; ++k) {
    // Residual of every unused e_j after projecting onto the eigenspace and
    // removing the vectors already chosen; pick the largest, lowest index first.
    Eigen::Index best = -1;
    double best_norm = -1.0;
    Vector best_vec;
    for (Eigen::Index j = 0; j < d; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      Vector u = cluster * cluster.row(j).transpose();
      for (Eigen::Index q = 0; q < k; ++q) u -= out.col(q).dot(u) * out.col(q);
      const double norm = u.norm();
      if (norm > best_norm * (1.0 + 1e-9)) {
        best = j;
        best_norm = norm;
        best_vec = std::move(u);
      }
    }
    used[static_cast<std::size_t>(best)] = true;
    Vector v = best_vec / best_norm;
    for (Eigen::Index q = 0; q < k; ++q) v -= out.col(q).dot(v) * out.col(q);
    out.col(k) = v.normalized();
  }
  return out;
}

}  // namespace

void apply_sign_convention(Eigen::Ref<Vector> v) {
  const double peak = v.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (std::abs(v[k]) >= peak * (1.0 - 1e-12)) {
      if (v[k] < 0.0) v = -v;
      return;
    }
  }
}

SymmetricEigen eigen_descending(const Matrix& a, double tie_tol) {
  if (a.rows() != a.cols() || a.rows() < 1) throw InvalidInput("eigen: matrix must be square");
  if (!a.allFinite()) throw InvalidInput("eigen: non-finite entry");
  const Eigen::Index d = a.rows();
  Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) throw InvalidInput("eigen: decomposition failed");

  SymmetricEigen out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();

  const double scale = out.values.cwiseAbs().maxCoeff();
  const double gap_tol = tie_tol * scale;
  Eigen::Index start = 0;
  while (start < d) {
    Eigen::Index end = start + 1;
    while (end < d && out.values[end - 1] - out.values[end] <= gap_tol) ++end;
    if (end - start > 1) {
      out.had_ties = true;
      out.vectors.middleCols(start, end - start) =
          canonical_cluster_basis(out.vectors.middleCols(start, end - start));
    }
    start = end;
  }
  for (Eigen::Index k = 0; k < d; ++k) {
    Vector v = out.vectors.col(k);
    apply_sign_convention(v);
    out.vectors.col(k) = v;
  }
  return out;
}

Matrix orthonormalize_columns(const Matrix& w) {
  Matrix q = w;
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < k; ++j) q.col(k) -= q.col(j).dot(q.col(k)) * q.col(j);
    }
    const double norm = q.col(k).norm();
    if (!(norm > 0.0)) throw InvalidInput("orthonormalize: linearly dependent columns");
    q.col(k) /= norm;
  }
  return q;
}

double subspace_angle(const Matrix& a, const Matrix& b) {
  const Matrix qa = orthonormalize_columns(a);
  const Matrix qb = orthonormalize_columns(b);
  const Matrix residual = qb - qa * (qa.transpose() * qb);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(residual);
  const double s = svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
  return std::asin(std::min(1.0, s));
}

double line_angle(const Vector& u, const Vector& v) {
  const Vector uh = u.normalized();
  const Vector vh = v.normalized();
  const double c = uh.dot(vh);
  const double s = (vh - c * uh).norm();
  return std::atan2(s, std::abs(c));
}

}  // namespace infoproj
