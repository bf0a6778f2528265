#include "oscex/phasefun.hpp"

#include <cmath>
#include <sstream>

#include "oscex/errors.hpp"

namespace oscex {

namespace {

constexpr int kMaxTerms = 64;
constexpr double kSeriesTol = 1e-18;
constexpr double kSymmetryTol = 1e-13;

// Truncated Taylor sums at the reduced step h:
//   c    = sum Z^k / (2k)!,         Z = -h^2 A
//   s/h  = sum Z^k / (2k+1)!
//   v/h2 = sum Z^k / (2k+2)!
void reduced_series(const SquareMatrix& z, SquareMatrix& c, SquareMatrix& sc,
                    SquareMatrix& vc) {
  const std::size_t n = z.dim();
  c = SquareMatrix::identity(n);
  sc = SquareMatrix::identity(n);
  vc = 0.5 * SquareMatrix::identity(n);
  SquareMatrix term = SquareMatrix::identity(n);
  double fact = 1.0;  // (2k)!
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = term * z;
    fact *= (2.0 * k - 1.0) * (2.0 * k);
    const double inv_c = 1.0 / fact;
    const double inv_s = inv_c / (2.0 * k + 1.0);
    const double inv_v = inv_s / (2.0 * k + 2.0);
    c += inv_c * term;
    sc += inv_s * term;
    vc += inv_v * term;
    if (max_abs(term) * inv_c < kSeriesTol * std::max(1.0, max_abs(c))) return;
  }
  std::ostringstream msg;
  msg << "phase function series did not reach tolerance within " << kMaxTerms
      << " terms after argument reduction (|Z|_1 = " << norm1(z) << ")";
  throw ConvergenceError(msg.str());
}

}  // namespace

PhaseFunctionSet phase_functions(const SquareMatrix& omega2, double eps) {
  if (!all_finite(omega2)) throw DomainError("phase_functions: non-finite matrix");
  if (!std::isfinite(eps)) throw DomainError("phase_functions: non-finite step");
  const std::size_t n = omega2.dim();
  if (n == 0) throw DomainError("phase_functions: empty matrix");

  const bool symmetric = is_symmetric(omega2, kSymmetryTol);

  // Halve eps until |h^2 A|_1 <= 1.
  int doublings = 0;
  double h = eps;
  while (h * h * norm1(omega2) > 1.0) {
    h *= 0.5;
    ++doublings;
  }

  SquareMatrix z = (-h * h) * omega2;
  SquareMatrix c, sc, vc;
  reduced_series(z, c, sc, vc);
  SquareMatrix s = h * sc;
  SquareMatrix vers = (h * h) * vc;

  const SquareMatrix eye = SquareMatrix::identity(n);
  for (int d = 0; d < doublings; ++d) {
    SquareMatrix vers2 = 2.0 * (s * s);
    SquareMatrix s2 = 2.0 * (s * c);
    SquareMatrix c2 = 2.0 * (c * c) - eye;
    c = std::move(c2);
    s = std::move(s2);
    vers = std::move(vers2);
  }

  if (symmetric) {
    c = symmetrized(c);
    s = symmetrized(s);
    vers = symmetrized(vers);
  }
  return PhaseFunctionSet{std::move(c), std::move(s), std::move(vers), eps};
}

SquareMatrix effective_delta(const SquareMatrix& omega2, double eps) {
  PhaseFunctionSet pf = phase_functions(omega2, eps);
  SquareMatrix m = SquareMatrix::identity(omega2.dim()) + pf.c;
  try {
    return linear_solve(m, 2.0 * pf.s);
  } catch (const SingularMatrixError& e) {
    std::ostringstream msg;
    msg << "resonant step: I + cos(Omega*eps) is singular, an eigenvalue of "
           "Omega*eps lies near an odd multiple of pi (condition estimate "
        << e.condition() << ")";
    throw ResonantStepError(msg.str());
  }
}

ScalarPhase scalar_phase(double omega2, double eps) {
  if (!std::isfinite(omega2) || !std::isfinite(eps))
    throw DomainError("scalar_phase: non-finite input");
  const double z = omega2 * eps * eps;
  if (std::abs(z) < 1e-6) {
    // Leading terms of the even series; relative error below 1e-25 here.
    const double c = 1.0 - z / 2.0 * (1.0 - z / 12.0 * (1.0 - z / 30.0));
    const double s = eps * (1.0 - z / 6.0 * (1.0 - z / 20.0 * (1.0 - z / 42.0)));
    const double v =
        eps * eps * (0.5 - z / 24.0 * (1.0 - z / 30.0 * (1.0 - z / 56.0)));
    return {c, s, v};
  }
  if (omega2 > 0.0) {
    const double w = std::sqrt(omega2);
    const double half = std::sin(0.5 * w * eps);
    return {std::cos(w * eps), std::sin(w * eps) / w, 2.0 * half * half / omega2};
  }
  const double mu = std::sqrt(-omega2);
  const double half = std::sinh(0.5 * mu * eps);
  return {std::cosh(mu * eps), std::sinh(mu * eps) / mu, 2.0 * half * half / (-omega2)};
}

double scalar_delta(double omega2, double eps) {
  ScalarPhase p = scalar_phase(omega2, eps);
  const double denom = 1.0 + p.c;
  if (std::abs(denom) < 1e-12)
    throw ResonantStepError(
        "resonant step: 1 + cos(w*eps) vanishes (w*eps at an odd multiple of pi)");
  return 2.0 * p.s / denom;
}

}  // namespace oscex
