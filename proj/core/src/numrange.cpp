#include "spectra/numrange.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "spectra/error.hpp"

namespace spectra {

bool NRangeBracket::outer_contains(cplx z, double inflate) const {
  for (const auto& hp : outer_halfplanes) {
    const double v = std::cos(hp.theta) * z.real() + std::sin(hp.theta) * z.imag();
    if (v > hp.s + outer_slack + inflate) return false;
  }
  return true;
}

NRangeBracket nrange_bracket(const CMatrix& a, int n_angles) {
  require_square_finite(a, "numerical range input");
  if (n_angles < 8) throw DomainError("nrange_bracket needs at least 8 angles");

  NRangeBracket br;
  const auto n = static_cast<std::size_t>(n_angles);
  br.angles.resize(n);
  br.inner_pts.resize(n);
  br.inner_vectors.resize(n);
  br.outer_halfplanes.resize(n);

  const double fro = a.norm();
  br.outer_slack = 16.0 * static_cast<double>(a.rows()) * std::numeric_limits<double>::epsilon() * std::max(1.0, fro);

  Eigen::SelfAdjointEigenSolver<CMatrix> es(a.rows());
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    const cplx rot = std::polar(1.0, -theta);
    const CMatrix h = 0.5 * (rot * a + std::conj(rot) * a.adjoint());
    es.compute(h);
    if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed in nrange_bracket");
    const Eigen::Index top = h.rows() - 1;
    CVector v = es.eigenvectors().col(top);
    br.angles[j] = theta;
    br.outer_halfplanes[j] = {theta, es.eigenvalues()(top)};
    br.inner_pts[j] = v.dot(a * v);  // v* A v
    br.inner_vectors[j] = std::move(v);
  }

  const double r = 2.0 * fro + 1.0;
  std::vector<geometry::Point> poly{{-r, -r}, {r, -r}, {r, r}, {-r, r}};
  for (const auto& hp : br.outer_halfplanes) {
    poly = geometry::clip_halfplane(poly, hp.theta, hp.s + br.outer_slack);
    if (poly.empty()) throw NumericalError("outer numerical-range polygon became empty");
  }
  br.outer_polygon = std::move(poly);
  br.inner_hull = geometry::convex_hull(br.inner_pts);
  return br;
}

DistBracket dist_bracket(const NRangeBracket& bracket, cplx lambda) {
  if (bracket.outer_polygon.empty()) throw NumericalError("empty outer polygon in distance bracket");
  DistBracket d{};
  d.lo = bracket.outer_contains(lambda) ? 0.0 : geometry::distance_to_convex(bracket.outer_polygon, lambda);
  d.hi = geometry::distance_to_convex(bracket.inner_hull, lambda);
  return d;
}

}  // namespace spectra
