#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spectra/linalg.hpp"

namespace spectra {

/// A reproduced construction together with its closed-form prediction.
struct GalleryCase {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  CMatrix a;
  CMatrix b;
  double closed_form = 0.0;
  double computed = 0.0;
  double rel_tol = 0.0;
  double abs_tol = 0.0;
  /// Auxiliary structural checks of the construction (eigenvalue locations,
  /// normality, asymptotic model); folded into matches().
  bool side_checks_ok = true;
  std::vector<std::pair<std::string, double>> extras;

  double abs_error() const;
  bool matches() const;
  double extra(const std::string& key, double fallback = 0.0) const;
};

/// n×n nilpotent Jordan block (ones on the superdiagonal).
CMatrix jordan_block(int n);
/// Jordan block plus x in the bottom-left corner.
CMatrix jordan_corner(int n, double x);

/// 2×2 pair A = [[0,1],[0,0]], B = [[0,1],[x,0]]; ratio of the point-spectrum
/// distance sum to ‖B − A‖_{S_p}^p against 2x^{−p/2}.
GalleryCase example1(double x, double p);

/// Jordan block A and its corner perturbation B(x). The ratio uses the disk
/// numerical range of A, whose radius is measured as λ_max(Re A).
/// extras: root_residual (distance of σ(B(x)) to the n-th roots of x),
/// nr_radius, nr_radius_closed.
GalleryCase example2(int n, double x, double p);

struct Example2Max {
  int n = 0;
  double p = 0.0;
  double x_star_closed = 0.0;
  double x_star_numeric = 0.0;
  double max_closed = 0.0;
  double max_numeric = 0.0;
};

/// Maximizes the example-2 ratio over x numerically (grid, then bisection on
/// a five-point derivative of the log-ratio) and compares with the closed form.
Example2Max example2_maximum(int n, double p);

/// GalleryCase view of example2_maximum (computed = numeric maximum).
GalleryCase example2_max_case(int n, double p);

/// A' = B(1) (normal, spectrum the n-th roots of unity), B' = Jordan block:
/// Σ dist(λ, σ(A'))^p = n against ‖B' − A'‖_{S_p}^p = 1.
/// extras: lhs, rhs, normal_residual, cor1_verdict (2 = VIOLATION_EXPECTED).
GalleryCase remark_new_demo(int n, double p);

/// Real orthogonal matrix whose rows u_k are built by the recursion with
/// u_{k,1} = 1/√n for every k. Throws NumericalError if a pivot vanishes.
CMatrix prop2_unitary(int n);

/// (diag(α), diag(α) + x·W*DW) with D = e_1 e_1* and W the transpose of
/// prop2_unitary(n), so that every diagonal entry of W*DW equals 1/n.
std::pair<CMatrix, CMatrix> prop2_pair(const std::vector<double>& alpha, double x);

struct Prop2Step {
  double x;
  double ratio;
  double limit_error;
  double first_order_residual;
  double first_order_bound;
};

struct Prop2Result {
  GalleryCase gallery;
  std::vector<Prop2Step> schedule;
  bool first_order_ok = false;
  bool monotone_ok = false;
  double final_error = 0.0;
};

/// Default x schedule: 1e-2 halved eight times.
std::vector<double> prop2_schedule();

/// Appendix family. `alpha` empty selects α_k = k − 1; `x` ≤ 0 selects the
/// last schedule value. Throws DomainError when eigenvalue clusters collide.
Prop2Result prop2_family(int n, double p, std::vector<double> alpha = {}, double x = -1.0);

/// Convenience for tables: the GalleryCase of prop2_family.
GalleryCase prop2_case(int n, double p, double x = -1.0);

}  // namespace spectra
