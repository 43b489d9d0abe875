#pragma once

namespace infoproj {

/// psi(x) for x > 0: upward recurrence to x >= 8, then the asymptotic series.
double digamma(double x);

/// log Gamma(x) for x > 0: same recurrence/Stirling scheme as digamma.
double log_gamma(double x);

/// kappa(nu) = psi((nu + d)/2) - psi(nu/2), strictly decreasing in nu.
double kappa(double nu, int d);

/// The nu with kappa(nu, d) = c, by bisection. Throws OutOfRange when c cannot
/// be bracketed in double range.
double kappa_inverse(double c, int d);

}  // namespace infoproj
