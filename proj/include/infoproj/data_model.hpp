#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "infoproj/types.hpp"

namespace infoproj {

/// n x d observations, one point per row.
///
/// Construction validates shape and finiteness. A matrix flagged as centered
/// must have every column mean within 1e-9 of the column RMS (1e-12 absolute
/// for an all-zero column).
class DataMatrix {
 public:
  explicit DataMatrix(Matrix values, bool centered = false);

  const Matrix& values() const noexcept { return values_; }
  std::size_t n() const noexcept { return static_cast<std::size_t>(values_.rows()); }
  std::size_t d() const noexcept { return static_cast<std::size_t>(values_.cols()); }
  bool centered() const noexcept { return centered_; }

  const double* data() const noexcept { return values_.data(); }

 private:
  Matrix values_;
  bool centered_;
};

/// A direction with unit Euclidean norm (tolerance 1e-10).
class UnitVector {
 public:
  explicit UnitVector(Vector w);
  /// Scales v to unit length; throws on a zero or non-finite vector.
  static UnitVector normalized(const Vector& v);

  const Vector& vec() const noexcept { return w_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(w_.size()); }
  UnitVector operator-() const { return UnitVector(-w_); }

 private:
  Vector w_;
};

/// d x r matrix with orthonormal columns (max |W'W - I| <= 1e-9).
class OrthonormalBasis {
 public:
  explicit OrthonormalBasis(Matrix basis);
  static OrthonormalBasis from_unit(const UnitVector& w);

  const Matrix& mat() const noexcept { return basis_; }
  std::size_t d() const noexcept { return static_cast<std::size_t>(basis_.rows()); }
  std::size_t r() const noexcept { return static_cast<std::size_t>(basis_.cols()); }
  UnitVector column(std::size_t j) const;

 private:
  Matrix basis_;
};

/// Prior-belief and display parameters for SIC evaluation.
struct SicParams {
  double sigma = 1.0;
  double rho = 1.0;
  std::optional<double> nu;
  std::optional<double> c;
  std::vector<double> deltas;

  void validate() const;
  /// Degrees of freedom: nu if given, else kappa_inverse(c, d), else 1.
  double resolve_nu(std::size_t d) const;
};

DataMatrix center(const DataMatrix& x);

/// sqrt of the mean squared row norm; 0 for an all-zero matrix.
double scale_measure(const DataMatrix& x);

struct OrthonormalityCheck {
  bool ok;
  double deviation;  // max |W'W - I|
};

OrthonormalityCheck validate_orthonormal(const Matrix& w, double tol);

/// True when every column mean is within 1e-9 of the column RMS, or within
/// 1e-12 absolute for an all-zero column.
bool is_centered(const Matrix& values);

}  // namespace infoproj
