#include "spectra/ineq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "spectra/assignment.hpp"
#include "spectra/error.hpp"
#include "spectra/geometry.hpp"
#include "spectra/random.hpp"

namespace spectra {

namespace {

void require_pair(const CMatrix& a, const CMatrix& b) {
  require_square_finite(a, "A");
  require_square_finite(b, "B");
  if (a.rows() != b.rows()) throw DomainError("A and B must have the same dimension");
}

void require_hermitian_pair(const CMatrix& a, const CMatrix& b) {
  require_pair(a, b);
  if (!is_hermitian(a) || !is_hermitian(b)) throw DomainError("A and B must be Hermitian");
}

struct Segment {
  cplx a;
  cplx b;
};

// Endpoints of a segment carrying all points; false when the points are not
// collinear within `tol`.
bool collinear_hull(const std::vector<cplx>& pts, double tol, Segment& seg) {
  double best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      const double d = std::abs(pts[i] - pts[j]);
      if (d > best) {
        best = d;
        seg = {pts[i], pts[j]};
      }
    }
  }
  if (best <= tol) return true;
  const cplx dir = (seg.b - seg.a) / best;
  for (const cplx& z : pts) {
    const double transverse = std::abs((std::conj(dir) * (z - seg.a)).imag());
    if (transverse > tol) return false;
  }
  return true;
}

}  // namespace

double segment_excess_sum(const RVector& eigs, double lo, double hi, double p, double deflate) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    const double l = eigs(i);
    const double below = lo - l - deflate;
    const double above = l - hi - deflate;
    if (below > 0.0) sum += std::pow(below, p);
    if (above > 0.0) sum += std::pow(above, p);
  }
  return sum;
}

IneqReport check_thm2(const CMatrix& a, const CMatrix& b, double p, const CheckOptions& opt) {
  require_pair(a, b);
  if (!(p >= 1.0)) throw DomainError("check_thm2 requires p >= 1 (use check_thm3 for Hermitian p < 1)");
  return check_thm2(nrange_bracket(a, opt.n_angles), a, b, p, opt);
}

IneqReport check_thm2(const NRangeBracket& w_a, const CMatrix& a, const CMatrix& b, double p, const CheckOptions& opt) {
  require_pair(a, b);
  if (!(p >= 1.0)) throw DomainError("check_thm2 requires p >= 1 (use check_thm3 for Hermitian p < 1)");

  const auto eigs = eigenvalues(b);
  double lhs = 0.0;
  double lhs_upper = 0.0;
  int outside = 0;
  for (const cplx& l : eigs) {
    const auto d = dist_bracket(w_a, l);
    if (d.lo > 0.0) {
      lhs += std::pow(d.lo, p);
      ++outside;
    }
    if (d.hi > 0.0) lhs_upper += std::pow(d.hi, p);
  }
  const double rhs = schatten_pow(b - a, p);
  auto r = make_report("thm2", lhs, rhs, p, opt.slack);
  r.extras = {{"lhs_upper", lhs_upper}, {"n_outside", outside}, {"n_angles", static_cast<double>(w_a.angles.size())}};
  return r;
}

IneqReport check_cor1(const CMatrix& a, const CMatrix& b, double p, const CheckOptions& opt, bool nonconvex_demo) {
  require_pair(a, b);
  if (!(p >= 1.0)) throw DomainError("check_cor1 requires p >= 1");
  if (!is_normal(a)) throw DomainError("check_cor1 requires a normal unperturbed matrix");

  const auto eig_a = eigenvalues(a);
  const auto eig_b = eigenvalues(b);
  const double tol = 1e-10 * std::max(1.0, operator_norm(a));
  Segment seg{};
  const bool convex = collinear_hull(eig_a, tol, seg);
  const double rhs = schatten_pow(b - a, p);

  double lhs = 0.0;
  if (convex) {
    for (const cplx& l : eig_b) {
      const double d = geometry::distance_to_segment(l, seg.a, seg.b);
      if (d > 0.0) lhs += std::pow(d, p);
    }
    auto r = make_report("cor1", lhs, rhs, p, opt.slack);
    r.extras = {{"convex", 1.0}};
    return r;
  }
  if (!nonconvex_demo) {
    throw DomainError("spectrum of A is not convex (not on a segment); see remark_new_demo for the failure mode");
  }
  for (const cplx& l : eig_b) {
    double d = std::numeric_limits<double>::infinity();
    for (const cplx& m : eig_a) d = std::min(d, std::abs(l - m));
    if (d > 0.0) lhs += std::pow(d, p);
  }
  auto r = make_report("cor1-nonconvex", lhs, rhs, p, opt.slack, /*violation_expected=*/true);
  r.extras = {{"convex", 0.0}};
  return r;
}

IneqReport check_thm3(const CMatrix& a, const CMatrix& b, double p, const CheckOptions& opt) {
  require_hermitian_pair(a, b);
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("check_thm3 requires p in (0, 1]");
  const RVector eig_a = hermitian_eigenvalues(a);
  const RVector eig_b = hermitian_eigenvalues(b);
  const double lo = eig_a.minCoeff();
  const double hi = eig_a.maxCoeff();
  const double res = eigenvalue_resolution(a, b);
  const double lhs = segment_excess_sum(eig_b, lo, hi, p, res);
  const double rhs = schatten_pow(b - a, p);
  auto r = make_report("thm3", lhs, rhs, p, opt.slack);
  r.extras = {{"min_sigma_a", lo}, {"max_sigma_a", hi}, {"eig_resolution", res}};
  return r;
}

std::vector<IneqReport> check_lemma45(const CMatrix& a, const CMatrix& b, const CheckOptions& opt) {
  require_hermitian_pair(a, b);
  const RVector eig_a = hermitian_eigenvalues(a);
  const RVector eig_b = hermitian_eigenvalues(b);  // ascending
  const double lo = eig_a.minCoeff();
  const double hi = eig_a.maxCoeff();
  const double res = eigenvalue_resolution(a, b);

  const RVector eig_diff = hermitian_eigenvalues(b - a);
  std::vector<double> s_plus, s_minus;  // singular values of (B−A)_± in nonincreasing order
  for (Eigen::Index i = eig_diff.size(); i-- > 0;) {
    if (eig_diff(i) > 0.0) s_plus.push_back(eig_diff(i));
  }
  for (Eigen::Index i = 0; i < eig_diff.size(); ++i) {
    if (eig_diff(i) < 0.0) s_minus.push_back(-eig_diff(i));
  }
  auto nth = [](const std::vector<double>& s, std::size_t n) { return n < s.size() ? s[n] : 0.0; };

  std::vector<IneqReport> out;
  std::size_t n = 0;
  for (Eigen::Index i = 0; i < eig_b.size() && eig_b(i) < lo - res; ++i, ++n) {
    out.push_back(make_report("lemma45-below-" + std::to_string(n + 1), lo - eig_b(i), nth(s_minus, n), 1.0, opt.slack));
  }
  n = 0;
  for (Eigen::Index i = eig_b.size(); i-- > 0 && eig_b(i) > hi + res; ++n) {
    out.push_back(make_report("lemma45-above-" + std::to_string(n + 1), eig_b(i) - hi, nth(s_plus, n), 1.0, opt.slack));
  }
  return out;
}

IneqReport check_kato_matching(const CMatrix& a, const CMatrix& b, double p, const CheckOptions& opt) {
  require_hermitian_pair(a, b);
  if (!(p > 0.0)) throw DomainError("check_kato_matching requires p > 0");
  const RVector alpha = hermitian_eigenvalues(a);
  const RVector beta = hermitian_eigenvalues(b);
  const double res = eigenvalue_resolution(a, b);
  const Eigen::Index n = alpha.size();
  Eigen::MatrixXd cost(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d = std::abs(alpha(i) - beta(j)) - res;
      cost(i, j) = d > 0.0 ? std::pow(d, p) : 0.0;
    }
  }
  const Assignment match = solve_assignment(cost);
  const double rhs = schatten_pow(b - a, p);
  return make_report("kato", match.cost, rhs, p, opt.slack, /*violation_expected=*/p < 1.0);
}

IneqReport check_bouldin(const CMatrix& a, const CMatrix& b, double p, const CheckOptions& opt) {
  require_pair(a, b);
  if (!(p >= 2.0)) throw DomainError("check_bouldin requires p >= 2");
  if (!is_normal(a) || !is_normal(b)) throw DomainError("check_bouldin requires normal A and B");
  const auto eig_a = eigenvalues(a);
  const auto eig_b = eigenvalues(b);
  double lhs = 0.0;
  for (const cplx& l : eig_b) {
    double d = std::numeric_limits<double>::infinity();
    for (const cplx& m : eig_a) d = std::min(d, std::abs(l - m));
    if (d > 0.0) lhs += std::pow(d, p);
  }
  return make_report("bouldin", lhs, schatten_pow(b - a, p), p, opt.slack);
}

IneqReport check_sp_variational(const CMatrix& k, double p, int frames, std::uint64_t seed, const CheckOptions& opt) {
  require_square_finite(k, "K");
  if (!(p >= 1.0)) throw DomainError("check_sp_variational requires p >= 1");
  if (frames < 0) throw DomainError("frame count must be nonnegative");
  const int n = static_cast<int>(k.rows());
  const double rhs = schatten_pow(k, p);

  double worst = 0.0;
  for (int f = 0; f < frames; ++f) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(f));
    const CMatrix e = haar_unitary(rng, n);
    const CMatrix g = haar_unitary(rng, n);
    const CMatrix proj = g.adjoint() * k * e;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += std::pow(std::abs(proj(i, i)), p);
    worst = std::max(worst, sum);
  }

  Eigen::JacobiSVD<CMatrix> svd(k, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const CMatrix proj = svd.matrixU().adjoint() * k * svd.matrixV();
  double attained = 0.0;
  for (int i = 0; i < n; ++i) attained += std::pow(std::abs(proj(i, i)), p);
  const double rel = rhs > 0.0 ? std::abs(attained - rhs) / rhs : std::abs(attained);

  auto r = make_report("sp_variational", worst, rhs, p, opt.slack);
  r.extras = {{"attained", attained}, {"attain_rel_err", rel}, {"frames", frames}};
  return r;
}

IneqReport check_thm4_matrix(const CMatrix& h0, const CMatrix& h, double a, double p, const CheckOptions& opt) {
  require_pair(h0, h);
  if (!(a > 0.0)) throw DomainError("check_thm4_matrix requires a > 0");
  if (!(p >= 1.0)) throw DomainError("check_thm4_matrix requires p >= 1");
  const RVector eig_h0 = hermitian_eigenvalues(h0);
  if (eig_h0.minCoeff() < -eigenvalue_resolution(h0, h)) throw DomainError("H0 must be positive semidefinite");

  const Eigen::Index n = h.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  auto resolvent = [&](const CMatrix& m) {
    const CMatrix shifted = a * id + m;
    const auto sv = singular_values(shifted).values;
    if (sv.back() <= 1e-13 * sv.front()) throw DomainError("-a lies in the spectrum; resolvent does not exist");
    return CMatrix(Eigen::PartialPivLU<CMatrix>(shifted).solve(id));
  };
  const CMatrix r0 = resolvent(h0);
  const CMatrix r = resolvent(h);
  const double rhs = schatten_pow(r0 - r, p);

  double lhs = 0.0;
  double max_err = 0.0;
  int counted = 0;
  for (const cplx& l : eigenvalues(h)) {
    if (!(l.real() > 1e-12)) continue;
    const double weight = std::abs(l.imag()) / std::norm(l + a);
    const cplx w = 1.0 / (a + l);
    const double geometric = std::abs(w - std::clamp(w.real(), 0.0, 1.0 / a));
    max_err = std::max(max_err, std::abs(weight - geometric));
    lhs += std::pow(weight, p);
    ++counted;
  }
  auto rep = make_report("thm4", lhs, rhs, p, opt.slack);
  rep.extras = {{"a", a}, {"counted", counted}, {"eq22_max_err", max_err}};
  return rep;
}

std::pair<IneqReport, IneqReport> check_heat(const CMatrix& h0, const CMatrix& h, double t, double p,
                                             const CheckOptions& opt) {
  require_hermitian_pair(h0, h);
  if (!(t > 0.0)) throw DomainError("check_heat requires t > 0");
  if (!(p > 0.0)) throw DomainError("check_heat requires p > 0");
  const double res = eigenvalue_resolution(h0, h);
  if (hermitian_eigenvalues(h0).minCoeff() < -res) throw DomainError("H0 must be positive semidefinite");

  const double rhs7 = schatten_pow(hermitian_expm(h, t) - hermitian_expm(h0, t), p);
  double lhs7 = 0.0;
  double lhs8 = 0.0;
  const RVector eig = hermitian_eigenvalues(h);
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    const double l = eig(i) + res;  // largest value compatible with the computed eigenvalue
    if (l >= 0.0) continue;
    lhs7 += std::pow(std::expm1(-t * l), p);
    lhs8 += std::pow(-l, p);
  }
  auto r7 = make_report("heat-semigroup", lhs7, rhs7, p, opt.slack);
  auto r8 = make_report("heat-negative-moments", lhs8, std::pow(t, -p) * rhs7, p, opt.slack);
  r7.extras = {{"t", t}};
  r8.extras = {{"t", t}};
  return {r7, r8};
}

}  // namespace spectra
