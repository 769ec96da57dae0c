#pragma once

#include <functional>

namespace spectra {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// log(1 + e^y) without overflow or cancellation.
double softplus(double y);

/// Integrand on (0, ∞) given as y ↦ log f(e^y), i.e. in terms of log s.
using LogIntegrand = std::function<double(double log_s)>;

/// ∫₀^∞ f(s) ds split as [0, 1] ∪ [1, ∞), each panel mapped to a half-line in
/// y = log s and integrated by exp-sinh quadrature, so algebraic endpoint
/// behaviour becomes exponential decay. Throws NumericalError when a panel's
/// error estimate exceeds 1e-9 of its L1 norm.
QuadResult integrate_half_line(const LogIntegrand& log_f, double tol = 1e-12);

}  // namespace spectra
