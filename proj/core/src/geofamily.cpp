#include "oscex/geofamily.hpp"

#include <cmath>

#include "oscex/errors.hpp"

namespace oscex {

namespace {

constexpr double kTol = 1e-12;

}

SquareMatrix family_matrix(const FamilyParams& p) {
  if (p.alpha == 0.0 || !std::isfinite(p.alpha))
    throw DomainError("family map requires alpha != 0");
  SquareMatrix a(2);
  a(0, 0) = p.beta / p.alpha;
  a(0, 1) = 1.0 / p.alpha;
  a(1, 0) = p.gamma * p.beta - (p.alpha * p.alpha + p.beta * p.beta) / p.alpha;
  a(1, 1) = p.gamma - p.beta / p.alpha;
  return a;
}

double quadratic_invariant(double x_n, double x_next, double gamma) {
  return x_next * x_next - gamma * x_next * x_n + x_n * x_n;
}

ReversibilityReport check_reversibility(const FamilyRule& rule, double eps) {
  const double ap = rule.alpha(eps);
  const double am = rule.alpha(-eps);
  const double bp = rule.beta(eps);
  const double bm = rule.beta(-eps);
  const double gp = rule.gamma(eps);
  if (ap == 0.0 || !std::isfinite(ap))
    throw DomainError("reversibility check requires alpha(eps) != 0");

  ReversibilityReport rep;
  rep.alpha_residual = am + ap;
  rep.gamma_residual = gp - (bp - bm) / ap;

  const bool constraints_ok =
      std::abs(rep.alpha_residual) <= kTol * (1.0 + std::abs(ap)) &&
      std::abs(rep.gamma_residual) <= kTol * (1.0 + std::abs(gp));

  rep.inverse_residual = std::numeric_limits<double>::quiet_NaN();
  rep.reversible = false;
  if (constraints_ok) {
    const SquareMatrix fwd = family_matrix({ap, bp, gp, eps});
    const SquareMatrix bwd = family_matrix({am, bm, rule.gamma(-eps), -eps});
    rep.inverse_residual = max_abs(bwd * fwd - SquareMatrix::identity(2));
    rep.reversible = rep.inverse_residual <= kTol * (1.0 + max_abs(fwd));
  }
  return rep;
}

FamilyParams exact_family_params(double m, double omega, double eps) {
  if (!(m > 0.0) || !(omega > 0.0))
    throw DomainError("exact family parameters need m > 0 and omega > 0");
  const double s = std::sin(omega * eps);
  if (std::abs(s) < 1e-12)
    throw ResonantStepError("resonant step: sin(w*eps) = 0 in exact family parameters");
  const double c = std::cos(omega * eps);
  return FamilyParams{m * omega / s, m * omega * c / s, 2.0 * c, eps};
}

}  // namespace oscex
