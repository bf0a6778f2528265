#pragma once

#include <variant>
#include <vector>

#include "oscex/matrix.hpp"

namespace oscex {

struct Forcing;

struct NoForcing {};

struct ConstantForcing {
  Vec a;
};

/// f(t) = sum_k coeffs[k] t^k; the leading coefficient must be nonzero.
struct PolynomialForcing {
  std::vector<Vec> coeffs;
};

/// f(t) = exp(rate * t) f0.
struct ExponentialForcing {
  Vec f0;
  double rate;
};

/// f(t) = sin(omega_f * t) f0.
struct SinusoidalForcing {
  Vec f0;
  double omega_f;
};

struct SumForcing {
  std::vector<Forcing> terms;
};

/// Driving force of the multidimensional oscillator, one of the closed
/// families for which the particular solution has a finite closed form.
struct Forcing {
  std::variant<NoForcing, ConstantForcing, PolynomialForcing, ExponentialForcing,
               SinusoidalForcing, SumForcing>
      value;

  static Forcing none() { return {NoForcing{}}; }
  static Forcing constant(Vec a) { return {ConstantForcing{std::move(a)}}; }
  static Forcing polynomial(std::vector<Vec> coeffs) {
    return {PolynomialForcing{std::move(coeffs)}};
  }
  static Forcing exponential(Vec f0, double rate) {
    return {ExponentialForcing{std::move(f0), rate}};
  }
  static Forcing sinusoidal(Vec f0, double omega_f) {
    return {SinusoidalForcing{std::move(f0), omega_f}};
  }
  static Forcing sum(std::vector<Forcing> terms) {
    return {SumForcing{std::move(terms)}};
  }

  bool is_none() const { return std::holds_alternative<NoForcing>(value); }
  bool is_constant() const { return std::holds_alternative<ConstantForcing>(value); }
};

/// Evaluate f(t) as an n-vector (zero for NoForcing).
Vec evaluate_forcing(const Forcing& f, double t, std::size_t n);

}  // namespace oscex
