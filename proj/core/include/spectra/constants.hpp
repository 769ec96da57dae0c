#pragma once

#include "spectra/linalg.hpp"

namespace spectra {

/// Two independent evaluations of one constant.
struct DualEval {
  double quadrature = 0.0;
  double closed_form = 0.0;

  double rel_error() const;
};

double gamma_fn(double x);
/// B(x, y) via log-Gamma; x, y > 0.
double beta_fn(double x, double y);

/// Integrability region shared by the constants: p > d/2 for d ≥ 2, p ≥ 1 for d = 1.
bool valid_dp(int d, double p);

/// (2π)^{−d} ∫_{ℝ^d} (|x|² + 1)^{−p} dx: radial quadrature against
/// (2π)^{−d} π^{d/2} Γ(p − d/2)/Γ(p).
DualEval c0(int d, double p);

/// Ratio ∫ s^{κ−1}(1+s)^{−2κ} ds / ∫ s^{2p−1−d/2+κ}(1+s)^{−2(p+κ)} ds against
/// B(κ, κ)/B(2p − d/2 + κ, d/2 + κ). Requires κ > 0 and 2p − d/2 + κ > 0.
DualEval c1(int d, double p, double kappa);

/// |Im λ|/|λ + a|² for Re λ > 0, a > 0. Throws NumericalError if it departs
/// from dist((a+λ)^{−1}, [0, 1/a]) by more than 1e-12·max(1, w).
double resolvent_weight(cplx lambda, double a);

/// dist((a+λ)^{−1}, [0, 1/a]) by projection onto the real segment.
double resolvent_segment_distance(cplx lambda, double a);

struct ChainReport {
  double i28 = 0.0;  // ∫ a^{α} (|λ|+a)^{−2p} (1+a)^{−2κ} da, α = 2p − d/2 − 1 + κ
  double i29 = 0.0;  // same integral after a = |λ|s
  double i30 = 0.0;  // lower bound with max(|λ|/R, 1)^{2κ} pulled out
  double substitution_rel_err = 0.0;
  bool lower_bound_holds = false;
  double ratio_29_30 = 0.0;
  /// Branch weights |Im λ|^p/|λ|^{d/2−κ} (inside the disk of radius R) and
  /// |Im λ|^p R^{2κ}/|λ|^{d/2+κ} (outside), and the one that applies.
  double weight_inner = 0.0;
  double weight_outer = 0.0;
  double weight = 0.0;
  /// |Im λ|^p·i30 = weight·∫ s^{α}(1+s)^{−2p}(1+Rs)^{−2κ} ds, relative residual.
  double weight_consistency = 0.0;
};

/// Numerical check of the integral chain linking the resolvent-weight bound
/// to the split-disk weight. `radius` R = 1 is the unit-disk split.
ChainReport thm6_chain_check(cplx lambda, int d, double p, double kappa, double radius = 1.0);

/// dist(λ, [0, ∞))^p / |λ|^{d/2}. Tabulated only: whether the corresponding
/// eigenvalue sum bound holds is open.
double conjectured_weight(cplx lambda, int d, double p);

}  // namespace spectra
