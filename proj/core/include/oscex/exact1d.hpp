#pragma once

namespace oscex {

/// One-dimensional phase-space point.
struct Phase1D {
  double x = 0.0;
  double v = 0.0;
  double t = 0.0;
};

/// Problem data for the 1-D oscillator family.
///
/// The undamped steppers read `omega` as the angular frequency of
/// x'' + omega^2 x = g. The damped stepper reads `omega` as the undamped
/// frequency omega0 of x'' = -omega0^2 x - 2 gamma x' - g (note the sign
/// convention flip on g between the two equations).
struct Osc1DSpec {
  double omega = 1.0;
  double gamma = 0.0;
  double g = 0.0;
  double m = 1.0;
};

/// The four equivalent discrete energy representations. With g = 0,
/// e3 == e2.
struct EnergyQuad {
  double e0;
  double e1;
  double e2;
  double e3;
};

/// Advance (x, v) by the exact flow of x'' + omega^2 x = g over eps
/// (any sign). The map is a rotation of (x - g/omega^2, v) by phase
/// omega*eps.
Phase1D exact_step(const Phase1D& state, const Osc1DSpec& spec, double eps);

/// Exact flow of the underdamped oscillator x'' = -omega0^2 x - 2 gamma x' - g.
/// Requires omega0^2 - gamma^2 > 0.
Phase1D exact_step_damped(const Phase1D& state, const Osc1DSpec& spec, double eps);

/// Position recurrence x_{n+1} = 2 cos(w e) x_n - x_{n-1} + (4g/w^2) sin^2(w e/2),
/// exact for constant step.
double recurrence_step(double x_n, double x_prev, const Osc1DSpec& spec, double eps);

/// Recover v_n from two consecutive positions:
/// v_n = w (x_{n+1} - x_n cos(w e)) / sin(w e) - (g/w) tan(w e/2).
double exact_velocity(double x_next, double x_n, const Osc1DSpec& spec, double eps);

/// All four discrete energy invariants of the pair (x_n, x_{n+1}).
EnergyQuad energy_invariants(double x_n, double x_next, const Osc1DSpec& spec,
                             double eps);

/// The implicit trapezoid-like form with delta = (2/w) tan(w e/2); solves a
/// 2x2 linear system and agrees with exact_step to roundoff. Kept as an
/// independent route for equivalence checks.
Phase1D trapezoid_form_step(const Phase1D& state, const Osc1DSpec& spec, double eps);

}  // namespace oscex
