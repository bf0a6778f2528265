#pragma once

#include "oscex/matrix.hpp"

namespace oscex {

/// The three entire functions of the squared-frequency matrix A = Omega^2
/// that enter every exact oscillator step, each evaluated directly from A
/// (no square root, no eigendecomposition):
///
///   c    = cos(Omega e)                  (dimensionless)
///   s    = Omega^-1 sin(Omega e)         (time)
///   vers = Omega^-2 (1 - cos(Omega e))   (time^2)
///
/// All three are even in Omega, so they continue automatically to
/// cosh/sinh behaviour when A has negative eigenvalues.
struct PhaseFunctionSet {
  SquareMatrix c;
  SquareMatrix s;
  SquareMatrix vers;
  double step = 0.0;
};

/// Evaluate (c, s, vers) for A = Omega^2 at step eps.
///
/// Argument reduction: eps is halved until |eps^2 A|_1 <= 1, the Taylor
/// series are summed to a relative term below 1e-18 (hard cap 64 terms),
/// and the result is reconstructed through the double-angle identities
///   c(2h) = 2 c(h)^2 - I,  s(2h) = 2 s(h) c(h),  vers(2h) = 2 s(h)^2.
/// Symmetric inputs are detected and the outputs symmetrized.
PhaseFunctionSet phase_functions(const SquareMatrix& omega2, double eps);

/// Effective step delta = 2 Omega^-1 tan(Omega eps / 2) = 2 s (I + c)^-1.
/// Throws ResonantStepError when I + c is singular (an eigenvalue of
/// Omega*eps sits at an odd multiple of pi).
SquareMatrix effective_delta(const SquareMatrix& omega2, double eps);

/// Scalar specialization, valid for any sign of omega2 (oscillatory,
/// flat, or hyperbolic).
struct ScalarPhase {
  double c;
  double s;
  double vers;
};

ScalarPhase scalar_phase(double omega2, double eps);

/// Scalar delta = (2/w) tan(w eps/2) continued evenly in w: equals eps at
/// omega2 = 0 and (2/mu) tanh(mu eps/2) for omega2 = -mu^2 < 0.
double scalar_delta(double omega2, double eps);

}  // namespace oscex
