#include "oscex/exactnd.hpp"

#include <cmath>
#include <sstream>

#include "oscex/errors.hpp"

namespace oscex {

namespace {

using Poly = std::vector<Vec>;  // coefficient vectors, degree == size-1

void require_dim(const Vec& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    std::ostringstream msg;
    msg << what << ": expected dimension " << n << ", got " << v.size();
    throw DomainError(msg.str());
  }
}

Vec constant_force(const Forcing& f, std::size_t n) {
  if (f.is_none()) return Vec(n, 0.0);
  if (const auto* c = std::get_if<ConstantForcing>(&f.value)) {
    require_dim(c->a, n, "constant forcing");
    return c->a;
  }
  throw DomainError(
      "this stepper handles forcing none/constant only; use nd_forced_recurrence "
      "for time-dependent forcing");
}

SquareMatrix shifted(const SquareMatrix& a, double shift) {
  SquareMatrix m = a;
  for (std::size_t i = 0; i < m.dim(); ++i) m(i, i) += shift;
  return m;
}

Vec resonance_guarded_solve(const SquareMatrix& a, double shift, const Vec& b) {
  try {
    return linear_solve(shifted(a, shift), b);
  } catch (const SingularMatrixError& e) {
    std::ostringstream msg;
    msg << "resonant forcing: Omega^2 + (" << shift
        << ") I is singular (condition estimate " << e.condition() << ")";
    throw ResonantForcingError(msg.str());
  }
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(vec_scale(double(j), p[j]));
  return d;
}

Vec poly_eval(const Poly& p, double t, std::size_t n) {
  Vec acc(n, 0.0);
  for (std::size_t j = p.size(); j-- > 0;) {
    acc = vec_scale(t, acc);
    acc = vec_add(acc, p[j]);
  }
  return acc;
}

// Phi = sum_k (-Omega^-2)^k Omega^-2 f^(2k), a polynomial of the same degree.
Poly polynomial_phi(const PolynomialForcing& f, const SquareMatrix& a) {
  if (f.coeffs.empty())
    throw DomainError("polynomial forcing needs at least one coefficient");
  if (vec_max_abs(f.coeffs.back()) == 0.0)
    throw DomainError("polynomial forcing: leading coefficient must be nonzero");
  const std::size_t n = a.dim();
  for (const Vec& c : f.coeffs) require_dim(c, n, "polynomial forcing");

  Poly phi(f.coeffs.size(), Vec(n, 0.0));
  Poly w;
  for (const Vec& c : f.coeffs) w.push_back(resonance_guarded_solve(a, 0.0, c));
  for (;;) {
    for (std::size_t j = 0; j < w.size(); ++j) phi[j] = vec_add(phi[j], w[j]);
    Poly d2 = poly_derivative(poly_derivative(w));
    if (d2.empty()) break;
    w.clear();
    for (const Vec& c : d2) w.push_back(vec_scale(-1.0, resonance_guarded_solve(a, 0.0, c)));
  }
  return phi;
}

struct PhiVisitor {
  const SquareMatrix& a;
  double t;

  ParticularSolution operator()(const NoForcing&) const {
    return {Vec(a.dim(), 0.0), Vec(a.dim(), 0.0)};
  }
  ParticularSolution operator()(const ConstantForcing& f) const {
    require_dim(f.a, a.dim(), "constant forcing");
    return {resonance_guarded_solve(a, 0.0, f.a), Vec(a.dim(), 0.0)};
  }
  ParticularSolution operator()(const PolynomialForcing& f) const {
    Poly phi = polynomial_phi(f, a);
    return {poly_eval(phi, t, a.dim()), poly_eval(poly_derivative(phi), t, a.dim())};
  }
  ParticularSolution operator()(const ExponentialForcing& f) const {
    require_dim(f.f0, a.dim(), "exponential forcing");
    Vec y = resonance_guarded_solve(a, f.rate * f.rate, f.f0);
    const double e = std::exp(f.rate * t);
    return {vec_scale(e, y), vec_scale(f.rate * e, y)};
  }
  ParticularSolution operator()(const SinusoidalForcing& f) const {
    require_dim(f.f0, a.dim(), "sinusoidal forcing");
    Vec y = resonance_guarded_solve(a, -f.omega_f * f.omega_f, f.f0);
    return {vec_scale(std::sin(f.omega_f * t), y),
            vec_scale(f.omega_f * std::cos(f.omega_f * t), y)};
  }
  ParticularSolution operator()(const SumForcing& f) const {
    ParticularSolution acc{Vec(a.dim(), 0.0), Vec(a.dim(), 0.0)};
    for (const Forcing& term : f.terms) {
      ParticularSolution p = particular_solution(term, a, t);
      acc.phi = vec_add(acc.phi, p.phi);
      acc.phidot = vec_add(acc.phidot, p.phidot);
    }
    return acc;
  }
};

struct PhiAccelVisitor {
  const SquareMatrix& a;
  double t;

  Vec operator()(const NoForcing&) const { return Vec(a.dim(), 0.0); }
  Vec operator()(const ConstantForcing&) const { return Vec(a.dim(), 0.0); }
  Vec operator()(const PolynomialForcing& f) const {
    Poly phi = polynomial_phi(f, a);
    return poly_eval(poly_derivative(poly_derivative(phi)), t, a.dim());
  }
  Vec operator()(const ExponentialForcing& f) const {
    require_dim(f.f0, a.dim(), "exponential forcing");
    Vec y = resonance_guarded_solve(a, f.rate * f.rate, f.f0);
    return vec_scale(f.rate * f.rate * std::exp(f.rate * t), y);
  }
  Vec operator()(const SinusoidalForcing& f) const {
    require_dim(f.f0, a.dim(), "sinusoidal forcing");
    Vec y = resonance_guarded_solve(a, -f.omega_f * f.omega_f, f.f0);
    return vec_scale(-f.omega_f * f.omega_f * std::sin(f.omega_f * t), y);
  }
  Vec operator()(const SumForcing& f) const {
    Vec acc(a.dim(), 0.0);
    for (const Forcing& term : f.terms)
      acc = vec_add(acc, particular_solution_accel(term, a, t));
    return acc;
  }
};

struct ForcingEvalVisitor {
  double t;
  std::size_t n;

  Vec operator()(const NoForcing&) const { return Vec(n, 0.0); }
  Vec operator()(const ConstantForcing& f) const {
    require_dim(f.a, n, "constant forcing");
    return f.a;
  }
  Vec operator()(const PolynomialForcing& f) const { return poly_eval(f.coeffs, t, n); }
  Vec operator()(const ExponentialForcing& f) const {
    require_dim(f.f0, n, "exponential forcing");
    return vec_scale(std::exp(f.rate * t), f.f0);
  }
  Vec operator()(const SinusoidalForcing& f) const {
    require_dim(f.f0, n, "sinusoidal forcing");
    return vec_scale(std::sin(f.omega_f * t), f.f0);
  }
  Vec operator()(const SumForcing& f) const {
    Vec acc(n, 0.0);
    for (const Forcing& term : f.terms) acc = vec_add(acc, evaluate_forcing(term, t, n));
    return acc;
  }
};

Vec solve_by_s(const SquareMatrix& s, const Vec& rhs) {
  try {
    return linear_solve(s, rhs);
  } catch (const SingularMatrixError& e) {
    std::ostringstream msg;
    msg << "resonant step: sin(Omega*eps) is singular (condition estimate "
        << e.condition() << ")";
    throw ResonantStepError(msg.str());
  }
}

}  // namespace

Vec evaluate_forcing(const Forcing& f, double t, std::size_t n) {
  return std::visit(ForcingEvalVisitor{t, n}, f.value);
}

OscNDSpec OscNDSpec::make(SquareMatrix omega2, Forcing forcing) {
  if (!all_finite(omega2)) throw DomainError("OscNDSpec: non-finite Omega^2");
  OscNDSpec spec;
  spec.symmetric = is_symmetric(omega2);
  spec.omega2 = std::move(omega2);
  spec.forcing = std::move(forcing);
  return spec;
}

PhaseND nd_exact_step(const PhaseND& state, const OscNDSpec& spec, double eps) {
  const std::size_t n = spec.omega2.dim();
  require_dim(state.x, n, "state position");
  require_dim(state.v, n, "state velocity");
  if (!all_finite(state.x) || !all_finite(state.v))
    throw DomainError("nd_exact_step: non-finite state");
  const Vec a = constant_force(spec.forcing, n);
  const PhaseFunctionSet pf = phase_functions(spec.omega2, eps);

  PhaseND out;
  out.x = vec_add(vec_add(pf.c * state.x, pf.s * state.v), pf.vers * a);
  out.v = vec_sub(vec_add(pf.c * state.v, pf.s * a),
                  spec.omega2 * (pf.s * state.x));
  out.t = state.t + eps;
  return out;
}

PhaseND nd_trapezoid_step(const PhaseND& state, const OscNDSpec& spec, double eps) {
  const std::size_t n = spec.omega2.dim();
  require_dim(state.x, n, "state position");
  require_dim(state.v, n, "state velocity");
  const Vec a = constant_force(spec.forcing, n);
  const SquareMatrix delta = effective_delta(spec.omega2, eps);
  const SquareMatrix da = delta * spec.omega2;

  // [ I      -d/2 ] [x']   [ x + (d/2) v              ]
  // [ dA/2    I   ] [v'] = [ v - (dA/2) x + d a       ]
  SquareMatrix block(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    block(i, i) = 1.0;
    block(n + i, n + i) = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      block(i, n + j) = -0.5 * delta(i, j);
      block(n + i, j) = 0.5 * da(i, j);
    }
  }
  Vec rhs(2 * n);
  const Vec r1 = vec_add(state.x, vec_scale(0.5, delta * state.v));
  const Vec r2 =
      vec_add(vec_sub(state.v, vec_scale(0.5, da * state.x)), delta * a);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = r1[i];
    rhs[n + i] = r2[i];
  }
  const Vec sol = linear_solve(block, rhs);
  PhaseND out;
  out.x.assign(sol.begin(), sol.begin() + n);
  out.v.assign(sol.begin() + n, sol.end());
  out.t = state.t + eps;
  return out;
}

Vec nd_recurrence_step(const Vec& x_n, const Vec& x_prev, const OscNDSpec& spec,
                       double eps) {
  const std::size_t n = spec.omega2.dim();
  require_dim(x_n, n, "x_n");
  require_dim(x_prev, n, "x_prev");
  const Vec a = constant_force(spec.forcing, n);
  const PhaseFunctionSet pf = phase_functions(spec.omega2, eps);
  return vec_add(vec_sub(vec_scale(2.0, pf.c * x_n), x_prev),
                 vec_scale(2.0, pf.vers * a));
}

Vec nd_central_velocity(const Vec& x_next, const Vec& x_prev,
                        const SquareMatrix& omega2, double eps) {
  if (x_next.size() != omega2.dim() || x_prev.size() != omega2.dim())
    throw DomainError("nd_central_velocity: dimension mismatch");
  const PhaseFunctionSet pf = phase_functions(omega2, eps);
  return vec_scale(0.5, solve_by_s(pf.s, vec_sub(x_next, x_prev)));
}

ParticularSolution particular_solution(const Forcing& f, const SquareMatrix& omega2,
                                       double t) {
  return std::visit(PhiVisitor{omega2, t}, f.value);
}

Vec particular_solution_accel(const Forcing& f, const SquareMatrix& omega2, double t) {
  return std::visit(PhiAccelVisitor{omega2, t}, f.value);
}

ForcedStep nd_forced_recurrence(const Vec& x_n, const Vec& x_prev,
                                const OscNDSpec& spec, double eps, double t_n) {
  const std::size_t n = spec.omega2.dim();
  require_dim(x_n, n, "x_n");
  require_dim(x_prev, n, "x_prev");
  const PhaseFunctionSet pf = phase_functions(spec.omega2, eps);

  const ParticularSolution p0 = particular_solution(spec.forcing, spec.omega2, t_n);
  const ParticularSolution pp =
      particular_solution(spec.forcing, spec.omega2, t_n + eps);
  const ParticularSolution pm =
      particular_solution(spec.forcing, spec.omega2, t_n - eps);

  const Vec two_c_x = vec_scale(2.0, pf.c * x_n);
  Vec x_next = vec_sub(two_c_x, x_prev);
  x_next = vec_add(x_next, pp.phi);
  x_next = vec_sub(x_next, vec_scale(2.0, pf.c * p0.phi));
  x_next = vec_add(x_next, pm.phi);

  Vec homog = vec_sub(vec_sub(x_next, x_prev), vec_sub(pp.phi, pm.phi));
  Vec v_n = vec_add(vec_scale(0.5, solve_by_s(pf.s, homog)), p0.phidot);
  return {std::move(x_next), std::move(v_n)};
}

double nd_energy(const PhaseND& state, const OscNDSpec& spec) {
  const std::size_t n = spec.omega2.dim();
  require_dim(state.x, n, "state position");
  require_dim(state.v, n, "state velocity");
  if (!is_symmetric(spec.omega2))
    throw DomainError("nd_energy requires symmetric Omega^2");
  const Vec a = constant_force(spec.forcing, n);
  return 0.5 * vec_dot(state.v, state.v) +
         0.5 * vec_dot(state.x, spec.omega2 * state.x) - vec_dot(a, state.x);
}

}  // namespace oscex
