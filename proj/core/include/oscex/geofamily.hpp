#pragma once

#include <functional>

#include "oscex/matrix.hpp"

namespace oscex {

/// Coefficients of the three-parameter map family
///   x_{n+1} - gamma x_n + x_{n-1} = 0,  p_n = alpha x_{n+1} - beta x_n,
/// evaluated at a particular step. alpha must be nonzero.
struct FamilyParams {
  double alpha;
  double beta;
  double gamma;
  double eps;
};

/// Step-size-dependent coefficient rule, evaluable at +/- eps.
struct FamilyRule {
  std::function<double(double)> alpha;
  std::function<double(double)> beta;
  std::function<double(double)> gamma;
};

/// The 2x2 matrix A(eps) advancing (x_n, p_n) -> (x_{n+1}, p_{n+1}).
/// det A(eps) = 1 identically (the map is symplectic).
SquareMatrix family_matrix(const FamilyParams& p);

/// Conserved quadratic form x_{n+1}^2 - gamma x_{n+1} x_n + x_n^2.
double quadratic_invariant(double x_n, double x_next, double gamma);

struct ReversibilityReport {
  bool reversible;
  double alpha_residual;   // alpha(-e) + alpha(e)
  double gamma_residual;   // gamma(e) - (beta(e) - beta(-e))/alpha(e)
  double inverse_residual; // max|A(-e) A(e) - I|
};

/// Numerical check of the time-reversibility constraints
///   alpha(-e) = -alpha(e),  gamma(e) = (beta(e) - beta(-e))/alpha(e),
/// plus the direct verification A(-e) A(e) = I. All three must hold
/// within 1e-12 (scaled) for `reversible` to be true.
ReversibilityReport check_reversibility(const FamilyRule& rule, double eps);

/// The parameters that make the family map the exact oscillator step:
/// alpha = m w / sin(w e), beta = m w cot(w e), gamma = 2 cos(w e).
FamilyParams exact_family_params(double m, double omega, double eps);

}  // namespace oscex
