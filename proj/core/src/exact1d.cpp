#include "oscex/exact1d.hpp"

#include <cmath>

#include "oscex/errors.hpp"
#include "oscex/phasefun.hpp"

namespace oscex {

namespace {

constexpr double kResonanceTol = 1e-12;

void require_undamped(const Osc1DSpec& spec) {
  if (!(spec.omega > 0.0)) throw DomainError("oscillator frequency must be positive");
  if (!std::isfinite(spec.omega) || !std::isfinite(spec.g))
    throw DomainError("non-finite oscillator parameters");
}

double checked_sin(double w, double eps) {
  const double s = std::sin(w * eps);
  if (std::abs(s) < kResonanceTol)
    throw ResonantStepError(
        "velocity not recoverable from positions at this step: sin(w*eps) = 0");
  return s;
}

}  // namespace

Phase1D exact_step(const Phase1D& state, const Osc1DSpec& spec, double eps) {
  require_undamped(spec);
  if (!std::isfinite(eps)) throw DomainError("non-finite step");
  const ScalarPhase p = scalar_phase(spec.omega * spec.omega, eps);
  Phase1D out;
  out.x = p.c * state.x + p.s * state.v + p.vers * spec.g;
  out.v = -spec.omega * spec.omega * p.s * state.x + p.c * state.v + p.s * spec.g;
  out.t = state.t + eps;
  return out;
}

Phase1D exact_step_damped(const Phase1D& state, const Osc1DSpec& spec, double eps) {
  const double w0 = spec.omega;
  const double gamma = spec.gamma;
  if (!(w0 > 0.0) || gamma < 0.0 || !std::isfinite(gamma))
    throw DomainError("damped oscillator needs omega0 > 0 and gamma >= 0");
  const double w2 = w0 * w0 - gamma * gamma;
  if (!(w2 > 0.0))
    throw DomainError("not underdamped: omega0^2 - gamma^2 must be positive");
  if (!std::isfinite(eps)) throw DomainError("non-finite step");

  const double w = std::sqrt(w2);
  const double xe = -spec.g / (w0 * w0);
  const double decay = std::exp(-gamma * eps);
  const double c = std::cos(w * eps);
  const double s = std::sin(w * eps);

  const double dx = state.x - xe;
  Phase1D out;
  out.x = xe + decay * (dx * (c + gamma * s / w) + (s / w) * state.v);
  out.v = decay * (-(w + gamma * gamma / w) * s * dx + (c - gamma * s / w) * state.v);
  out.t = state.t + eps;
  return out;
}

double recurrence_step(double x_n, double x_prev, const Osc1DSpec& spec, double eps) {
  require_undamped(spec);
  const double w = spec.omega;
  const double half = std::sin(0.5 * w * eps);
  return 2.0 * std::cos(w * eps) * x_n - x_prev +
         (4.0 * spec.g / (w * w)) * half * half;
}

double exact_velocity(double x_next, double x_n, const Osc1DSpec& spec, double eps) {
  require_undamped(spec);
  const double w = spec.omega;
  const double s = checked_sin(w, eps);
  const double c = std::cos(w * eps);
  const double tan_half = s / (1.0 + c);
  return w * (x_next - x_n * c) / s - (spec.g / w) * tan_half;
}

EnergyQuad energy_invariants(double x_n, double x_next, const Osc1DSpec& spec,
                             double eps) {
  require_undamped(spec);
  const double w = spec.omega;
  const double g = spec.g;
  const double s = checked_sin(w, eps);
  const double c = std::cos(w * eps);
  const double half = std::sin(0.5 * w * eps);
  const double tan_half = s / (1.0 + c);
  const double cos_half2 = 0.5 * (1.0 + c);  // cos^2(w*eps/2)

  EnergyQuad q;
  q.e0 = x_next * x_next - 2.0 * c * x_n * x_next + x_n * x_n -
         (x_n + x_next) * (2.0 * half / w) * (2.0 * half / w) * g;

  const double d1 = (x_next - x_n) / (2.0 / w * half);
  q.e1 = 0.5 * d1 * d1 + 0.5 * w * w * x_n * x_next - 0.5 * (x_n + x_next) * g;

  const double d2 = (x_next - x_n * c) / (s / w);
  q.e2 = 0.5 * d2 * d2 + 0.5 * w * w * x_n * x_n -
         (x_n + x_next) / (2.0 * cos_half2) * g;

  const double vn = d2 - (g / w) * tan_half;
  q.e3 = 0.5 * vn * vn + 0.5 * w * w * x_n * x_n - g * x_n;
  return q;
}

Phase1D trapezoid_form_step(const Phase1D& state, const Osc1DSpec& spec, double eps) {
  require_undamped(spec);
  const double w2 = spec.omega * spec.omega;
  const double delta = scalar_delta(w2, eps);

  // (x' - x)/d = (v' + v)/2,  (v' - v)/d = -w^2 (x' + x)/2 + g
  // as a 2x2 system in (x', v').
  const double hd = 0.5 * delta;
  const double det = 1.0 + hd * hd * w2;
  const double r1 = state.x + hd * state.v;
  const double r2 = state.v + delta * (-0.5 * w2 * state.x + spec.g);
  Phase1D out;
  out.x = (r1 + hd * r2) / det;
  out.v = (r2 - hd * w2 * r1) / det;
  out.t = state.t + eps;
  return out;
}

}  // namespace oscex
