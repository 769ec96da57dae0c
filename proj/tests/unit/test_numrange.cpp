#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "spectra/error.hpp"
#include "spectra/geometry.hpp"
#include "spectra/numrange.hpp"
#include "spectra/random.hpp"
#include "test_util.hpp"

namespace spectra {
namespace {

using testing::diag;

CMatrix jordan2() {
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 1) = 1.0;
  return a;
}

// Oracle: support function max Re(e^{-iθ}<Av,v>) by brute-force sampling of unit vectors.
double sampled_support(const CMatrix& a, double theta, Rng& rng, int samples) {
  double best = -INFINITY;
  const cplx rot = std::polar(1.0, -theta);
  for (int i = 0; i < samples; ++i) {
    const CVector v = random_unit_vector(rng, static_cast<int>(a.rows()));
    best = std::max(best, (rot * v.dot(a * v)).real());
  }
  return best;
}

TEST(Geometry, SegmentDistance) {
  using geometry::distance_to_segment;
  EXPECT_NEAR(distance_to_segment({2.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}), 1.0, 1e-15);
  EXPECT_NEAR(distance_to_segment({0.5, -0.5}, {0.0, 0.0}, {1.0, 0.0}), 0.5, 1e-15);
  EXPECT_NEAR(distance_to_segment({3.0, 4.0}, {0.0, 0.0}, {0.0, 0.0}), 5.0, 1e-15);
}

TEST(Geometry, HullOfSquareWithInteriorPoints) {
  std::vector<geometry::Point> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.2, 0.7}};
  const auto hull = geometry::convex_hull(pts);
  EXPECT_EQ(hull.size(), 4u);
  EXPECT_EQ(geometry::distance_to_convex(hull, {0.5, 0.5}), 0.0);
  EXPECT_NEAR(geometry::distance_to_convex(hull, {2.0, 0.5}), 1.0, 1e-15);
  EXPECT_NEAR(geometry::distance_to_convex(hull, {2.0, 2.0}), std::sqrt(2.0), 1e-15);
}

TEST(Geometry, DegenerateHulls) {
  const auto point = geometry::convex_hull({{1, 1}, {1, 1}});
  EXPECT_NEAR(geometry::distance_to_convex(point, {4, 5}), 5.0, 1e-15);
  const auto seg = geometry::convex_hull({{0, 0}, {1, 0}, {0.5, 0}});
  EXPECT_NEAR(geometry::distance_to_convex(seg, {0.5, 2.0}), 2.0, 1e-15);
  EXPECT_NEAR(geometry::distance_to_convex(seg, {0.3, 0.0}), 0.0, 1e-15);
}

TEST(NRange, HermitianCollapsesToSegment) {
  Rng rng = derive_rng(201, 0);
  const CMatrix h = gue(rng, 6);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  for (int n_angles : {16, 64, 256}) {
    const NRangeBracket br = nrange_bracket(h, n_angles);
    double re_min = INFINITY, re_max = -INFINITY, im_ext = 0.0;
    for (const auto& v : br.outer_polygon) {
      re_min = std::min(re_min, v.real());
      re_max = std::max(re_max, v.real());
      im_ext = std::max(im_ext, std::abs(v.imag()));
    }
    const double disc = 2.0 * operator_norm(h) * std::pow(std::sin(std::numbers::pi / n_angles), 2);
    EXPECT_LE(im_ext, disc + 1e-10) << n_angles;
    EXPECT_LE(re_min, lo + 1e-10);
    EXPECT_GE(re_max, hi - 1e-10);
    EXPECT_GE(re_min, lo - disc - 1e-10);
    EXPECT_LE(re_max, hi + disc + 1e-10);
  }
}

TEST(NRange, JordanBlockIsHalfDisk) {
  const int n_angles = 256;
  const NRangeBracket br = nrange_bracket(jordan2(), n_angles);
  const double eps = 1.0 / std::cos(std::numbers::pi / n_angles) - 1.0;
  for (const auto& v : br.outer_polygon) EXPECT_LE(std::abs(v), 0.5 * (1.0 + eps) + 1e-12);
  for (const auto& v : br.inner_hull) EXPECT_GE(std::abs(v), 0.5 * (1.0 - eps) - 1e-12);
}

TEST(NRange, ScalarMatrixIsAPoint) {
  const cplx c(1.5, -0.5);
  const CMatrix a = c * CMatrix::Identity(3, 3);
  const NRangeBracket br = nrange_bracket(a, 32);
  for (const auto& v : br.inner_hull) EXPECT_NEAR(std::abs(v - c), 0.0, 1e-12);
  for (const auto& v : br.outer_polygon) EXPECT_NEAR(std::abs(v - c), 0.0, 1e-8);
  const DistBracket d = dist_bracket(br, c + cplx(0.0, 2.0));
  EXPECT_NEAR(d.lo, 2.0, 1e-8);
  EXPECT_NEAR(d.hi, 2.0, 1e-12);
}

TEST(NRange, StoredVectorsRealizeInnerPoints) {
  Rng rng = derive_rng(202, 0);
  const CMatrix a = ginibre(rng, 9);
  const NRangeBracket br = nrange_bracket(a, 64);
  ASSERT_EQ(br.inner_pts.size(), br.inner_vectors.size());
  for (std::size_t i = 0; i < br.inner_pts.size(); ++i) {
    const CVector& v = br.inner_vectors[i];
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
    EXPECT_LE(std::abs(v.dot(a * v) - br.inner_pts[i]), 1e-12);
  }
}

TEST(NRange, SupportValuesAreTopEigenvaluesOfHermitianParts) {
  Rng rng = derive_rng(203, 0);
  const CMatrix a = ginibre(rng, 7);
  const NRangeBracket br = nrange_bracket(a, 32);
  for (const HalfPlane& hp : br.outer_halfplanes) {
    const cplx rot = std::polar(1.0, -hp.theta);
    const CMatrix herm = 0.5 * (rot * a + std::conj(rot) * a.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
    EXPECT_NEAR(hp.s, es.eigenvalues().maxCoeff(), 1e-12);
    // The support value dominates every sampled quadratic form.
    Rng vrng = derive_rng(203, 1);
    EXPECT_LE(sampled_support(a, hp.theta, vrng, 200), hp.s + 1e-12);
  }
}

TEST(NRange, InnerHullInsideOuterPolygon) {
  Rng rng = derive_rng(204, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix a = ginibre(rng, 3 + trial);
    const NRangeBracket br = nrange_bracket(a, 48);
    for (const auto& v : br.inner_hull) EXPECT_TRUE(br.outer_contains(v, 1e-12));
  }
}

TEST(NRange, RejectsTooFewAngles) { EXPECT_THROW(nrange_bracket(jordan2(), 4), DomainError); }

TEST(DistBracket, InteriorPointIsZero) {
  const NRangeBracket br = nrange_bracket(jordan2(), 64);
  const DistBracket d = dist_bracket(br, {0.1, 0.1});
  EXPECT_EQ(d.lo, 0.0);
  EXPECT_EQ(d.hi, 0.0);
}

TEST(DistBracket, HermitianSegment) {
  const NRangeBracket br = nrange_bracket(diag({0.0, 1.0}), 256);
  const DistBracket d = dist_bracket(br, 2.0);
  EXPECT_LE(d.lo, 1.0);
  EXPECT_GE(d.hi, 1.0);
  EXPECT_NEAR(d.lo, 1.0, 1e-4);
  EXPECT_NEAR(d.hi, 1.0, 1e-4);
}

TEST(DistBracket, JordanBlockAtOne) {
  const CMatrix a = jordan2();
  const NRangeBracket br = nrange_bracket(a, 256);
  const DistBracket d = dist_bracket(br, 1.0);
  // Oracle: the support value in direction 0 from random unit vectors.
  Rng rng = derive_rng(205, 0);
  const double support0 = sampled_support(a, 0.0, rng, 20000);
  EXPECT_NEAR(support0, 0.5, 1e-3);
  EXPECT_LE(d.lo, 0.5 + 1e-12);
  EXPECT_GE(d.hi, 0.5 - 1e-12);
  EXPECT_NEAR(d.lo, 0.5, 1e-4);
  EXPECT_NEAR(d.hi, 0.5, 1e-4);
}

TEST(DistBracket, SandwichTightensWithAngles) {
  Rng rng = derive_rng(206, 0);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + 3 * trial % 31;
    const CMatrix a = ginibre(rng, n);
    const cplx lambda = 3.0 * complex_normal(rng);
    double prev_gap = INFINITY;
    for (int n_angles : {16, 32, 64, 128, 256}) {
      const DistBracket d = dist_bracket(nrange_bracket(a, n_angles), lambda);
      EXPECT_LE(d.lo, d.hi + 1e-12);
      const double gap = d.hi - d.lo;
      EXPECT_LE(gap, prev_gap + 1e-12) << n << " " << n_angles;
      prev_gap = gap;
    }
  }
}

TEST(DistBracket, SpectrumContainedInOuterPolygon) {
  Rng rng = derive_rng(207, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = ginibre(rng, 2 + trial);
    const NRangeBracket br = nrange_bracket(a, 64);
    for (const cplx& l : eigenvalues(a)) EXPECT_TRUE(br.outer_contains(l, 1e-8));
  }
}

}  // namespace
}  // namespace spectra
