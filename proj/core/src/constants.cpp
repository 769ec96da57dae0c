#include "spectra/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spectra/error.hpp"
#include "spectra/quadrature.hpp"

namespace spectra {

namespace {

void require_kappa(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("kappa must be positive");
}

// ∫₀^∞ s^{e}(1+s)^{−f}(1+rs)^{−g} ds.
double beta_like(double e, double f, double r, double g) {
  return integrate_half_line([=](double y) {
           double v = e * y - f * softplus(y);
           if (g != 0.0) v -= g * softplus(y + std::log(r));
           return v;
         }).value;
}

}  // namespace

double DualEval::rel_error() const { return std::abs(quadrature - closed_form) / std::abs(closed_form); }

double gamma_fn(double x) { return std::tgamma(x); }

double beta_fn(double x, double y) {
  if (!(x > 0.0 && y > 0.0)) throw DomainError("Beta arguments must be positive");
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

bool valid_dp(int d, double p) {
  if (d < 1 || !std::isfinite(p)) return false;
  return d == 1 ? p >= 1.0 : p > 0.5 * d;
}

DualEval c0(int d, double p) {
  if (!valid_dp(d, p)) throw DomainError("c0 requires p > d/2 (d >= 2) or p >= 1 (d = 1)");
  const double dd = d;
  const double pi = std::numbers::pi;
  const double prefactor = std::pow(2.0 * pi, -dd);
  const double sphere = 2.0 * std::pow(pi, 0.5 * dd) / gamma_fn(0.5 * dd);
  // ∫₀^∞ r^{d−1}(1+r²)^{−p} dr, in terms of y = log r.
  const double radial =
      integrate_half_line([=](double y) { return (dd - 1.0) * y - p * softplus(2.0 * y); }).value;
  DualEval out;
  out.quadrature = prefactor * sphere * radial;
  out.closed_form = prefactor * std::pow(pi, 0.5 * dd) * gamma_fn(p - 0.5 * dd) / gamma_fn(p);
  return out;
}

DualEval c1(int d, double p, double kappa) {
  require_kappa(kappa);
  if (d < 1) throw DomainError("dimension must be positive");
  const double dd = d;
  const double shape = 2.0 * p - 0.5 * dd + kappa;
  if (!(shape > 0.0) || !std::isfinite(shape)) throw DomainError("c1 requires 2p - d/2 + kappa > 0");
  const double num = beta_like(kappa - 1.0, 2.0 * kappa, 1.0, 0.0);
  const double den = beta_like(shape - 1.0, 2.0 * (p + kappa), 1.0, 0.0);
  DualEval out;
  out.quadrature = num / den;
  out.closed_form = beta_fn(kappa, kappa) / beta_fn(shape, 0.5 * dd + kappa);
  return out;
}

double resolvent_segment_distance(cplx lambda, double a) {
  const cplx z = 1.0 / (a + lambda);
  return std::abs(z - cplx(std::clamp(z.real(), 0.0, 1.0 / a), 0.0));
}

double resolvent_weight(cplx lambda, double a) {
  if (!(a > 0.0)) throw DomainError("resolvent_weight requires a > 0");
  if (!(lambda.real() > 0.0)) throw DomainError("resolvent_weight requires Re(lambda) > 0");
  const double w = std::abs(lambda.imag()) / std::norm(lambda + a);
  const double g = resolvent_segment_distance(lambda, a);
  if (std::abs(w - g) > 1e-12 * std::max(1.0, w)) {
    throw NumericalError("resolvent weight disagrees with its segment-distance form");
  }
  return w;
}

ChainReport thm6_chain_check(cplx lambda, int d, double p, double kappa, double radius) {
  require_kappa(kappa);
  if (!valid_dp(d, p)) throw DomainError("thm6_chain_check requires p > d/2 (d >= 2) or p >= 1 (d = 1)");
  if (!(radius > 0.0)) throw DomainError("radius must be positive");
  if (lambda.imag() == 0.0 && lambda.real() >= 0.0) throw DomainError("lambda must lie off [0, inf)");

  const double dd = d;
  const double m = std::abs(lambda);
  const double lm = std::log(m);
  const double alpha = 2.0 * p - 0.5 * dd - 1.0 + kappa;

  ChainReport r;
  r.i28 = integrate_half_line([=](double y) {
            return alpha * y - 2.0 * p * (lm + softplus(y - lm)) - 2.0 * kappa * softplus(y);
          }).value;
  r.i29 = std::pow(m, kappa - 0.5 * dd) * beta_like(alpha, 2.0 * p, m, 2.0 * kappa);
  r.substitution_rel_err = std::abs(r.i28 - r.i29) / std::abs(r.i28);

  const double inner_integral = beta_like(alpha, 2.0 * p, radius, 2.0 * kappa);
  const double pulled = std::pow(std::max(m / radius, 1.0), 2.0 * kappa);
  r.i30 = std::pow(m, kappa - 0.5 * dd) / pulled * inner_integral;
  r.lower_bound_holds = r.i29 >= r.i30 * (1.0 - 1e-12);
  r.ratio_29_30 = r.i29 / r.i30;

  const double im_p = std::pow(std::abs(lambda.imag()), p);
  r.weight_inner = im_p / std::pow(m, 0.5 * dd - kappa);
  r.weight_outer = im_p * std::pow(radius, 2.0 * kappa) / std::pow(m, 0.5 * dd + kappa);
  r.weight = m < radius ? r.weight_inner : r.weight_outer;
  const double lhs = im_p * r.i30;
  const double rhs = r.weight * inner_integral;
  r.weight_consistency = lhs == rhs ? 0.0 : std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
  return r;
}

double conjectured_weight(cplx lambda, int d, double p) {
  if (lambda == cplx(0.0, 0.0)) throw DomainError("conjectured_weight undefined at 0");
  const double dist = lambda.real() >= 0.0 ? std::abs(lambda.imag()) : std::abs(lambda);
  return std::pow(dist, p) / std::pow(std::abs(lambda), 0.5 * d);
}

}  // namespace spectra
