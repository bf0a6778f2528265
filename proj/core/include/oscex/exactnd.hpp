#pragma once

#include "oscex/forcing.hpp"
#include "oscex/matrix.hpp"
#include "oscex/phasefun.hpp"

namespace oscex {

struct PhaseND {
  Vec x;
  Vec v;
  double t = 0.0;
};

/// Problem data for x'' + Omega^2 x = f(t). `symmetric` gates the energy
/// diagnostic, which is only an invariant for symmetric Omega^2.
struct OscNDSpec {
  SquareMatrix omega2;
  Forcing forcing = Forcing::none();
  bool symmetric = false;

  static OscNDSpec make(SquareMatrix omega2, Forcing forcing = Forcing::none());
};

/// Exact step for f = 0 or f = a const:
///   x' = c x + s v + vers a,  v' = -Omega^2 s x + c v + s a.
/// The inhomogeneous terms go through vers and s, so constant forcing works
/// even for singular Omega^2. Step size may vary per call.
PhaseND nd_exact_step(const PhaseND& state, const OscNDSpec& spec, double eps);

/// The equivalent implicit form
///   delta^-1 (x'-x) = (v'+v)/2,  delta^-1 (v'-v) = -Omega^2 (x'+x)/2 + a,
/// solved as one 2n x 2n linear system. Agrees with nd_exact_step to roundoff.
PhaseND nd_trapezoid_step(const PhaseND& state, const OscNDSpec& spec, double eps);

/// Position recurrence x_{n+1} = 2 c x_n - x_{n-1} + 2 vers a (constant step).
Vec nd_recurrence_step(const Vec& x_n, const Vec& x_prev, const OscNDSpec& spec,
                       double eps);

/// Central-difference velocity v_n = (1/2) Omega (sin Omega e)^-1 (x_{n+1} - x_{n-1}),
/// computed by solving with s = Omega^-1 sin(Omega e).
Vec nd_central_velocity(const Vec& x_next, const Vec& x_prev,
                        const SquareMatrix& omega2, double eps);

struct ParticularSolution {
  Vec phi;
  Vec phidot;
};

/// Closed-form particular solution Phi(t) of x'' + Omega^2 x = f(t) for the
/// supported forcing classes, with its analytic time derivative:
///   polynomial  -- finite sum of repeated solves by Omega^2,
///   exponential -- (Omega^2 + rate^2 I)^-1 exp(rate t) f0,
///   sinusoidal  -- (Omega^2 - omega_f^2 I)^-1 sin(omega_f t) f0,
///   sum         -- termwise.
ParticularSolution particular_solution(const Forcing& f, const SquareMatrix& omega2,
                                       double t);

/// Analytic second derivative of the particular solution, differentiated
/// termwise from the same closed forms (never via Phi'' = f - Omega^2 Phi).
Vec particular_solution_accel(const Forcing& f, const SquareMatrix& omega2, double t);

struct ForcedStep {
  Vec x_next;
  Vec v_n;
};

/// Forced recurrence (constant step):
///   x_{n+1} = 2 c x_n - x_{n-1} + Phi_{n+1} - 2 c Phi_n + Phi_{n-1},
///   v_n = (1/2) s^-1 (x_{n+1} - x_{n-1} - Phi_{n+1} + Phi_{n-1}) + Phidot_n.
ForcedStep nd_forced_recurrence(const Vec& x_n, const Vec& x_prev,
                                const OscNDSpec& spec, double eps, double t_n);

/// Invariant I = |v|^2/2 + <x, Omega^2 x>/2 - <a, x>. Requires symmetric
/// Omega^2 and forcing none/constant.
double nd_energy(const PhaseND& state, const OscNDSpec& spec);

}  // namespace oscex
