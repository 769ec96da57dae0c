#pragma once

#include <vector>

#include "spectra/geometry.hpp"
#include "spectra/linalg.hpp"

namespace spectra {

inline constexpr int kDefaultAngles = 256;

/// Support half-plane { z : Re(e^{−iθ} z) ≤ s }.
struct HalfPlane {
  double theta;
  double s;
};

/// Inner and outer polygonal approximation of the closed numerical range.
///
/// For every angle θ_j, s_j is the top eigenvalue of the Hermitian part of
/// e^{−iθ_j}A and inner_pts[j] = ⟨A v_j, v_j⟩ for the corresponding unit
/// eigenvector v_j. The convex hull of the inner points lies in W(A); W(A)
/// lies in the intersection of the half-planes.
struct NRangeBracket {
  std::vector<double> angles;
  std::vector<cplx> inner_pts;
  std::vector<CVector> inner_vectors;
  std::vector<HalfPlane> outer_halfplanes;

  /// Rounding allowance added to every s_j when the outer polygon is formed.
  double outer_slack = 0.0;
  std::vector<geometry::Point> outer_polygon;  // counter-clockwise
  std::vector<geometry::Point> inner_hull;     // counter-clockwise

  /// True when z satisfies every (slackened) support inequality.
  bool outer_contains(cplx z, double inflate = 0.0) const;
};

NRangeBracket nrange_bracket(const CMatrix& a, int n_angles = kDefaultAngles);

struct DistBracket {
  double lo;  // distance to the outer polygon
  double hi;  // distance to the inner hull
};

/// lo ≤ dist(λ, closure W(A)) ≤ hi.
DistBracket dist_bracket(const NRangeBracket& bracket, cplx lambda);

}  // namespace spectra
