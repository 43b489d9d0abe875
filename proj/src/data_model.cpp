#include "infoproj/data_model.hpp"

#include <cmath>
#include <string>

#include "infoproj/errors.hpp"
#include "infoproj/special_functions.hpp"

namespace infoproj {
namespace {

constexpr double kUnitTol = 1e-10;
constexpr double kOrthoTol = 1e-9;

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) throw InvalidInput(std::string(what) + ": non-finite entry");
}

Vector column_means(const Matrix& m) {
  return m.colwise().sum().transpose() / static_cast<double>(m.rows());
}

}  // namespace

bool is_centered(const Matrix& values) {
  const auto n = static_cast<double>(values.rows());
  for (Eigen::Index j = 0; j < values.cols(); ++j) {
    const double mean = values.col(j).sum() / n;
    const double rms = std::sqrt(values.col(j).squaredNorm() / n);
    const double limit = rms > 0.0 ? 1e-9 * rms : 1e-12;
    if (std::abs(mean) > limit) return false;
  }
  return true;
}

DataMatrix::DataMatrix(Matrix values, bool centered)
    : values_(std::move(values)), centered_(centered) {
  if (values_.rows() < 1 || values_.cols() < 1) {
    throw InvalidInput("data matrix must have at least one row and one column");
  }
  require_finite(values_, "data matrix");
  if (centered_ && !is_centered(values_)) {
    throw InvalidInput("data matrix flagged centered but column means exceed tolerance");
  }
}

UnitVector::UnitVector(Vector w) : w_(std::move(w)) {
  if (w_.size() < 1 || !w_.allFinite()) throw InvalidInput("unit vector: empty or non-finite");
  const double norm = w_.norm();
  if (std::abs(norm - 1.0) > kUnitTol) {
    throw InvalidInput("unit vector: norm " + std::to_string(norm) + " is not 1");
  }
}

UnitVector UnitVector::normalized(const Vector& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvalidInput("cannot normalize a zero or non-finite vector");
  }
  return UnitVector(v / norm);
}

OrthonormalBasis::OrthonormalBasis(Matrix basis) : basis_(std::move(basis)) {
  const auto check = validate_orthonormal(basis_, kOrthoTol);
  if (!check.ok) {
    throw InvalidInput("basis columns are not orthonormal (deviation " +
                       std::to_string(check.deviation) + ")");
  }
}

OrthonormalBasis OrthonormalBasis::from_unit(const UnitVector& w) {
  Matrix m(static_cast<Eigen::Index>(w.size()), 1);
  m.col(0) = w.vec();
  return OrthonormalBasis(std::move(m));
}

UnitVector OrthonormalBasis::column(std::size_t j) const {
  if (j >= r()) throw InvalidInput("basis column index out of range");
  return UnitVector(basis_.col(static_cast<Eigen::Index>(j)));
}

void SicParams::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidInput("sigma must be positive");
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw InvalidInput("rho must be nonnegative");
  if (nu && !(*nu > 0.0)) throw InvalidInput("nu must be positive");
  if (c && !(*c > 0.0)) throw InvalidInput("c must be positive");
  if (nu && c) throw InvalidInput("give nu or c, not both");
  for (double delta : deltas) {
    if (!(delta > 0.0) || !std::isfinite(delta)) throw InvalidInput("deltas must be positive");
  }
}

double SicParams::resolve_nu(std::size_t d) const {
  if (nu) return *nu;
  if (c) return kappa_inverse(*c, static_cast<int>(d));
  return 1.0;
}

DataMatrix center(const DataMatrix& x) {
  Matrix v = x.values();
  // A second pass removes the rounding residue left by the first.
  for (int pass = 0; pass < 2; ++pass) v.rowwise() -= column_means(v).transpose();
  return DataMatrix(std::move(v), true);
}

double scale_measure(const DataMatrix& x) {
  return std::sqrt(x.values().squaredNorm() / static_cast<double>(x.n()));
}

OrthonormalityCheck validate_orthonormal(const Matrix& w, double tol) {
  if (w.cols() < 1 || w.rows() < 1) throw InvalidInput("basis must be non-empty");
  if (w.cols() > w.rows()) throw InvalidInput("basis has more columns than rows (r > d)");
  require_finite(w, "basis");
  const Matrix gram = w.transpose() * w;
  const double deviation =
      (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  return {deviation <= tol, deviation};
}

}  // namespace infoproj
