#include "spectra/quadrature.hpp"

#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "spectra/error.hpp"

namespace spectra {

double softplus(double y) { return y > 0.0 ? y + std::log1p(std::exp(-y)) : std::log1p(std::exp(y)); }

QuadResult integrate_half_line(const LogIntegrand& log_f, double tol) {
  boost::math::quadrature::exp_sinh<double> integrator;
  QuadResult out;
  // s = e^y, ds = e^y dy. Head: s ∈ (0, 1] is y = −u; tail: s ∈ [1, ∞) is y = u.
  const auto head = [&](double u) { return std::exp(log_f(-u) - u); };
  const auto tail = [&](double u) { return std::exp(log_f(u) + u); };
  for (int panel = 0; panel < 2; ++panel) {
    double err = 0.0;
    double l1 = 0.0;
    double v = 0.0;
    try {
      v = panel == 0 ? integrator.integrate(head, tol, &err, &l1) : integrator.integrate(tail, tol, &err, &l1);
    } catch (const std::exception& e) {
      throw NumericalError(std::string("quadrature failed: ") + e.what());
    }
    if (!std::isfinite(v) || err > 1e-9 * l1) {
      throw NumericalError("quadrature did not converge (integrand may be near its divergence threshold)");
    }
    out.value += v;
    out.error_estimate += err;
  }
  return out;
}

}  // namespace spectra
