#include "spectra/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spectra/error.hpp"
#include "spectra/ineq.hpp"

namespace spectra {

namespace {

double min_distance(cplx z, const std::vector<cplx>& set) {
  double d = std::numeric_limits<double>::infinity();
  for (const cplx& s : set) d = std::min(d, std::abs(z - s));
  return d;
}

double numerical_radius_of_jordan(int n) {
  const CMatrix a = jordan_block(n);
  return hermitian_eigenvalues(0.5 * (a + a.adjoint())).maxCoeff();
}

// Σ_k (|λ_k| − r)_+^p / ‖B − A‖_{S_p}^p for the corner perturbation, with
// eigenvalues from the dense solver.
double example2_ratio(int n, double x, double p, double radius, std::vector<cplx>* eig_out = nullptr) {
  const CMatrix a = jordan_block(n);
  const CMatrix b = jordan_corner(n, x);
  const auto eig = eigenvalues(b);
  double num = 0.0;
  for (const cplx& l : eig) {
    const double d = std::abs(l) - radius;
    if (d > 0.0) num += std::pow(d, p);
  }
  if (eig_out) *eig_out = eig;
  return num / schatten_pow(b - a, p);
}

}  // namespace

double GalleryCase::abs_error() const { return std::abs(computed - closed_form); }

bool GalleryCase::matches() const {
  return side_checks_ok && std::isfinite(computed) && abs_error() <= std::max(abs_tol, rel_tol * std::abs(closed_form));
}

double GalleryCase::extra(const std::string& key, double fallback) const {
  for (const auto& [k, v] : extras) {
    if (k == key) return v;
  }
  return fallback;
}

CMatrix jordan_block(int n) {
  if (n < 1) throw DomainError("Jordan block dimension must be positive");
  CMatrix a = CMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = 1.0;
  return a;
}

CMatrix jordan_corner(int n, double x) {
  CMatrix b = jordan_block(n);
  b(n - 1, 0) += x;
  return b;
}

GalleryCase example1(double x, double p) {
  if (!(x > 0.0)) throw DomainError("example1 requires x > 0");
  if (!(p > 0.0)) throw DomainError("example1 requires p > 0");
  GalleryCase g;
  g.name = "example1";
  g.params = {{"x", x}, {"p", p}};
  g.a = jordan_block(2);
  g.b = jordan_corner(2, x);

  std::vector<cplx> spec_a;
  for (const auto& it : spectrum(g.a).items) spec_a.push_back(it.eigenvalue);
  double num = 0.0;
  for (const cplx& l : eigenvalues(g.b)) num += std::pow(min_distance(l, spec_a), p);
  g.computed = num / schatten_pow(g.b - g.a, p);
  g.closed_form = 2.0 * std::pow(x, -p / 2.0);
  g.rel_tol = 1e-10;
  return g;
}

GalleryCase example2(int n, double x, double p) {
  if (n < 2) throw DomainError("example2 requires n >= 2");
  if (!(x > 0.0)) throw DomainError("example2 requires x > 0");
  if (!(p > 0.0)) throw DomainError("example2 requires p > 0");
  GalleryCase g;
  g.name = "example2";
  g.params = {{"n", n}, {"x", x}, {"p", p}};
  g.a = jordan_block(n);
  g.b = jordan_corner(n, x);

  const double radius_closed = std::cos(std::numbers::pi / (n + 1));
  const double radius = numerical_radius_of_jordan(n);
  std::vector<cplx> eig;
  g.computed = example2_ratio(n, x, p, radius, &eig);

  const double rho = std::pow(x, 1.0 / n);
  std::vector<cplx> roots;
  for (int k = 0; k < n; ++k) roots.push_back(std::polar(rho, 2.0 * std::numbers::pi * k / n));
  double residual = 0.0;
  for (const cplx& l : eig) residual = std::max(residual, min_distance(l, roots));
  for (const cplx& r : roots) residual = std::max(residual, min_distance(r, eig));

  const double gap = rho - radius_closed;
  g.closed_form = gap > 0.0 ? n * std::pow(gap, p) / std::pow(x, p) : 0.0;
  g.rel_tol = 1e-8;
  g.abs_tol = 1e-12;
  // Root-location accuracy is only gated where the eigensolver is well conditioned.
  g.side_checks_ok = n > 16 || residual <= 1e-8 * std::max(1.0, rho);
  g.extras = {{"root_residual", residual}, {"nr_radius", radius}, {"nr_radius_closed", radius_closed}};
  return g;
}

Example2Max example2_maximum(int n, double p) {
  if (n < 2) throw DomainError("example2_maximum requires n >= 2");
  if (!(p > 0.0)) throw DomainError("example2_maximum requires p > 0");
  const double nd = static_cast<double>(n);
  const double c = std::cos(std::numbers::pi / (n + 1));

  Example2Max out;
  out.n = n;
  out.p = p;
  out.x_star_closed = std::pow(nd / (nd - 1.0) * c, nd);
  out.max_closed = std::pow((1.0 - 1.0 / nd) / c, p * (nd - 1.0)) * std::pow(nd, 1.0 - p);

  // Search over the eigenvalue modulus ρ = x^{1/n}; the ratio vanishes for ρ ≤ r.
  const double r = numerical_radius_of_jordan(n);
  auto log_ratio = [&](double rho) { return std::log(example2_ratio(n, std::pow(rho, nd), p, r)); };

  constexpr int kGrid = 200;
  const double lo = r * (1.0 + 1e-3 / nd);
  const double hi = 3.0 * r;
  double best = -std::numeric_limits<double>::infinity();
  int best_i = 0;
  std::vector<double> grid(kGrid + 1);
  for (int i = 0; i <= kGrid; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / kGrid;
    const double v = log_ratio(grid[static_cast<std::size_t>(i)]);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  double left = grid[static_cast<std::size_t>(std::max(best_i - 1, 0))];
  double right = grid[static_cast<std::size_t>(std::min(best_i + 1, kGrid))];

  auto slope = [&](double rho) {
    const double h = 1e-3 * (rho - r);
    return (-log_ratio(rho + 2 * h) + 8 * log_ratio(rho + h) - 8 * log_ratio(rho - h) + log_ratio(rho - 2 * h)) /
           (12 * h);
  };
  for (int it = 0; it < 200 && right - left > 1e-15 * right; ++it) {
    const double mid = 0.5 * (left + right);
    if (slope(mid) > 0.0) {
      left = mid;
    } else {
      right = mid;
    }
  }
  const double rho_star = 0.5 * (left + right);
  out.x_star_numeric = std::pow(rho_star, nd);
  out.max_numeric = std::exp(log_ratio(rho_star));
  return out;
}

GalleryCase example2_max_case(int n, double p) {
  const auto m = example2_maximum(n, p);
  GalleryCase g;
  g.name = "example2-max";
  g.params = {{"n", n}, {"p", p}};
  g.a = jordan_block(n);
  g.b = jordan_corner(n, m.x_star_numeric);
  g.closed_form = m.max_closed;
  g.computed = m.max_numeric;
  g.rel_tol = 1e-8;
  const double x_err = std::abs(m.x_star_numeric - m.x_star_closed) / m.x_star_closed;
  g.side_checks_ok = x_err <= 1e-8;
  g.extras = {{"x_star_closed", m.x_star_closed}, {"x_star_numeric", m.x_star_numeric}, {"x_star_rel_err", x_err}};
  return g;
}

GalleryCase remark_new_demo(int n, double p) {
  if (n < 2) throw DomainError("remark_new_demo requires n >= 2");
  if (!(p > 0.0)) throw DomainError("remark_new_demo requires p > 0");
  GalleryCase g;
  g.name = "remark-new";
  g.params = {{"n", n}, {"p", p}};
  g.a = jordan_corner(n, 1.0);
  g.b = jordan_block(n);

  const auto eig_a = eigenvalues(g.a);
  double lhs = 0.0;
  for (const cplx& l : eigenvalues(g.b)) lhs += std::pow(min_distance(l, eig_a), p);
  const double rhs = schatten_pow(g.b - g.a, p);
  const double normal_residual = max_abs(g.a.adjoint() * g.a - g.a * g.a.adjoint());

  double cor1_code = -1.0;
  if (p >= 1.0) {
    const auto rep = check_cor1(g.a, g.b, p, {}, /*nonconvex_demo=*/true);
    cor1_code = static_cast<double>(rep.verdict);
  }

  g.closed_form = n;
  g.computed = lhs / rhs;
  g.rel_tol = 1e-12;
  g.side_checks_ok = std::abs(lhs - n) <= 1e-12 * n && std::abs(rhs - 1.0) <= 1e-12 && normal_residual <= 1e-12;
  g.extras = {{"lhs", lhs}, {"rhs", rhs}, {"normal_residual", normal_residual}, {"cor1_verdict", cor1_code}};
  return g;
}

CMatrix prop2_unitary(int n) {
  if (n < 2) throw DomainError("prop2_unitary requires n >= 2");
  const double nd = static_cast<double>(n);
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
  u(0, 0) = 1.0 / std::sqrt(nd);
  u(0, 1) = std::sqrt(1.0 - 1.0 / nd);
  // Row k (0-based) copies the first k entries of row k−1, cancels the inner
  // product in entry k and renormalizes through entry k+1.
  for (int k = 1; k + 1 < n; ++k) {
    const double pivot = u(k - 1, k);
    if (std::abs(pivot) < 1e-300) throw NumericalError("prop2_unitary: vanishing pivot in recursion");
    double prefix = 0.0;
    for (int j = 0; j < k; ++j) {
      u(k, j) = u(k - 1, j);
      prefix += u(k - 1, j) * u(k - 1, j);
    }
    u(k, k) = -prefix / pivot;
    const double used = prefix + u(k, k) * u(k, k);
    u(k, k + 1) = std::sqrt(std::max(0.0, 1.0 - used));
  }
  for (int j = 0; j + 1 < n; ++j) u(n - 1, j) = u(n - 2, j);
  u(n - 1, n - 1) = -u(n - 2, n - 1);
  return u.cast<cplx>();
}

std::pair<CMatrix, CMatrix> prop2_pair(const std::vector<double>& alpha, double x) {
  const int n = static_cast<int>(alpha.size());
  const CMatrix w = prop2_unitary(n).transpose();
  CMatrix d = CMatrix::Zero(n, n);
  d(0, 0) = 1.0;
  CMatrix pert = w.adjoint() * d * w;
  pert = 0.5 * (pert + pert.adjoint());
  CMatrix a = CMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) a(k, k) = alpha[static_cast<std::size_t>(k)];
  return {a, a + x * pert};
}

std::vector<double> prop2_schedule() {
  std::vector<double> xs;
  double x = 1e-2;
  for (int i = 0; i <= 8; ++i, x *= 0.5) xs.push_back(x);
  return xs;
}

namespace {

struct Prop2Eval {
  double ratio;
  double first_order_residual;
};

Prop2Eval prop2_eval(const std::vector<double>& alpha, double x, double p) {
  const int n = static_cast<int>(alpha.size());
  const auto [a, b] = prop2_pair(alpha, x);
  const RVector lam = hermitian_eigenvalues(b);  // ascending
  std::vector<double> sorted = alpha;
  std::sort(sorted.begin(), sorted.end());

  double min_gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k + 1 < n; ++k) min_gap = std::min(min_gap, sorted[static_cast<std::size_t>(k + 1)] - sorted[static_cast<std::size_t>(k)]);

  double num = 0.0;
  double residual = 0.0;
  for (int k = 0; k < n; ++k) {
    const double shift = lam(k) - sorted[static_cast<std::size_t>(k)];
    if (std::abs(shift) >= 0.5 * min_gap) {
      throw DomainError("prop2_family: eigenvalue clusters collide; use a smaller x");
    }
    double d = std::numeric_limits<double>::infinity();
    for (double al : alpha) d = std::min(d, std::abs(lam(k) - al));
    num += std::pow(d, p);
    residual = std::max(residual, std::abs(shift - x / n));
  }
  // ‖x·W*DW‖_{S_p}^p = x^p exactly; subtracting B − A would add rounding-level
  // singular values that dominate a quasi-norm.
  return {num / std::pow(x, p), residual};
}

}  // namespace

Prop2Result prop2_family(int n, double p, std::vector<double> alpha, double x) {
  if (n < 2) throw DomainError("prop2_family requires n >= 2");
  if (!(p > 0.0)) throw DomainError("prop2_family requires p > 0");
  if (alpha.empty()) {
    for (int k = 0; k < n; ++k) alpha.push_back(k);
  }
  if (static_cast<int>(alpha.size()) != n) throw DomainError("prop2_family: alpha must have n entries");
  {
    auto s = alpha;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw DomainError("prop2_family: alpha must be pairwise distinct");
  }
  const auto schedule = prop2_schedule();
  if (x <= 0.0) x = schedule.back();

  const double nd = static_cast<double>(n);
  const double limit = std::pow(nd, 1.0 - p);

  // Second-order coefficient bound: Σ_{j≠k} |P_jk|² / |α_k − α_j| with |P_jk| = 1/n.
  double c2 = 0.0;
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != k) s += 1.0 / (nd * nd * std::abs(alpha[static_cast<std::size_t>(k)] - alpha[static_cast<std::size_t>(j)]));
    }
    c2 = std::max(c2, s);
  }

  Prop2Result out;
  out.first_order_ok = true;
  out.monotone_ok = true;
  double prev_err = std::numeric_limits<double>::infinity();
  for (double xs : schedule) {
    const auto ev = prop2_eval(alpha, xs, p);
    Prop2Step step{xs, ev.ratio, std::abs(ev.ratio - limit), ev.first_order_residual, 2.0 * c2 * xs * xs + 1e-13};
    if (step.first_order_residual > step.first_order_bound) out.first_order_ok = false;
    if (step.limit_error > prev_err + 1e-9) out.monotone_ok = false;
    prev_err = step.limit_error;
    out.schedule.push_back(step);
  }
  out.final_error = out.schedule.back().limit_error;

  const auto [a, b] = prop2_pair(alpha, x);
  GalleryCase& g = out.gallery;
  g.name = "prop2";
  g.params = {{"n", n}, {"p", p}, {"x", x}};
  g.a = a;
  g.b = b;
  g.closed_form = limit;
  g.computed = prop2_eval(alpha, x, p).ratio;
  g.abs_tol = 1e-2;
  g.side_checks_ok = out.first_order_ok && out.monotone_ok && out.final_error < 1e-2;
  g.extras = {{"first_order_ok", out.first_order_ok ? 1.0 : 0.0},
              {"monotone_ok", out.monotone_ok ? 1.0 : 0.0},
              {"final_error", out.final_error}};
  return out;
}

GalleryCase prop2_case(int n, double p, double x) { return prop2_family(n, p, {}, x).gallery; }

}  // namespace spectra
