#pragma once

#include <functional>

#include "oscex/matrix.hpp"

namespace oscex {

/// Nonlinear remainder g in x'' = -w^2 x + g(x) or y' = L y + g(y).
/// The Jacobian is optional; when present the implicit solver may use it.
struct NonlinearForce {
  std::function<Vec(const Vec&)> g;
  std::function<SquareMatrix(const Vec&)> jacobian;  // may be empty
};

using LinearPart = SquareMatrix;

/// exp(eps L) and phi1(eps L), phi1(z) = (e^z - 1)/z, evaluated together by
/// scaling-and-squaring on the truncated series (the doubling step uses
/// phi1(2z) = phi1(z)(e^z + I)/2).
struct ExpPhi {
  SquareMatrix exp;
  SquareMatrix phi1;
};

ExpPhi exp_and_phi1(const LinearPart& l, double eps);
SquareMatrix matrix_exponential(const LinearPart& l, double eps);

/// Two-step trigonometric method
/// x_{n+1} = 2 cos(w e) x_n - x_{n-1} + ((2/w) sin(w e/2))^2 g(x_n).
/// Exact when g is constant.
Vec gautschi_step(const Vec& x_n, const Vec& x_prev, double omega, double eps,
                  const NonlinearForce& force);

/// y' = exp(eps L) (y + eps g(y)).
Vec lawson_explicit_step(const Vec& y, const LinearPart& l, double eps,
                         const NonlinearForce& force);

/// Solves y' = exp(eps L) y + eps g(y') by fixed-point iteration (Newton
/// when a Jacobian is available and the iteration stalls); residual 1e-13,
/// cap 50 iterations.
Vec lawson_implicit_step(const Vec& y, const LinearPart& l, double eps,
                         const NonlinearForce& force);

/// y' = exp(eps L) y + eps phi1(eps L) g(y). Exact for constant g.
Vec exponential_euler_step(const Vec& y, const LinearPart& l, double eps,
                           const NonlinearForce& force);

/// Baseline x_{n+1} = 2 x_n - x_{n-1} - e^2 w^2 x_n + e^2 g; second order,
/// not exact, not energy-preserving. Kept as a contrast fixture.
double symmetric_euler_step(double x_n, double x_prev, double omega, double eps,
                            double g_const);

}  // namespace oscex
