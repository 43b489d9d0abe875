#pragma once

#include <cstddef>

#include "infoproj/types.hpp"

namespace infoproj {

/// Symmetric eigendecomposition with a reproducible basis.
///
/// Eigenvalues are sorted descending. Inside a cluster of (near-)equal
/// eigenvalues the solver's arbitrary basis is replaced by the Gram-Schmidt
/// orthonormalization of the projected standard basis vectors e_1, e_2, ...,
/// so a degenerate eigenspace always yields the same vectors. Each vector is
/// then signed so its largest-magnitude entry (first one on ties) is positive.
struct SymmetricEigen {
  Vector values;   // descending
  Matrix vectors;  // columns, same order as values
  bool had_ties = false;
};

/// Two adjacent eigenvalues count as tied when they differ by at most
/// tie_tol * max|lambda| (every eigenvalue of the zero matrix is tied).
SymmetricEigen eigen_descending(const Matrix& a, double tie_tol = 1e-10);

/// Flip v so its largest-magnitude entry is positive.
void apply_sign_convention(Eigen::Ref<Vector> v);

/// Gram-Schmidt on the columns of w, in order (two passes).
Matrix orthonormalize_columns(const Matrix& w);

/// Largest principal angle (radians) between span(a) and span(b).
double subspace_angle(const Matrix& a, const Matrix& b);

/// Angle between the lines spanned by u and v, in [0, pi/2].
double line_angle(const Vector& u, const Vector& v);

}  // namespace infoproj
