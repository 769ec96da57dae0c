#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "spectra/error.hpp"
#include "spectra/gallery.hpp"
#include "test_util.hpp"

namespace spectra {
namespace {

constexpr double kPi = std::numbers::pi;

double example2_max_closed(int n, double p) {
  const double c = std::cos(kPi / (n + 1));
  return std::pow((1.0 - 1.0 / n) / c, p * (n - 1)) * std::pow(n, 1.0 - p);
}

TEST(Example1, ClosedFormRatios) {
  const std::vector<std::array<double, 3>> cases{{1.0, 2.0, 2.0}, {0.25, 2.0, 8.0}, {4.0, 1.0, 1.0}};
  for (const auto& [x, p, expected] : cases) {
    const GalleryCase g = example1(x, p);
    EXPECT_TRUE(g.matches()) << x << " " << p;
    EXPECT_NEAR(g.computed, expected, 1e-10 * expected);
    EXPECT_NEAR(g.closed_form, expected, 1e-14 * expected);
  }
  EXPECT_THROW(example1(0.0, 1.0), DomainError);
}

TEST(Example1, MatricesAreExact) {
  const GalleryCase g = example1(0.3, 1.0);
  CMatrix a = CMatrix::Zero(2, 2), b = CMatrix::Zero(2, 2);
  a(0, 1) = b(0, 1) = 1.0;
  b(1, 0) = 0.3;
  EXPECT_EQ(g.a, a);
  EXPECT_EQ(g.b, b);
}

TEST(Example2, EigenvaluesAreRootsOfX) {
  for (int n : {2, 3, 8, 16}) {
    const double x = 0.7;
    const GalleryCase g = example2(n, x, 1.0);
    EXPECT_TRUE(g.matches()) << n;
    const std::vector<cplx> eig = eigenvalues(g.b);
    for (int k = 0; k < n; ++k) {
      const cplx root = std::polar(std::pow(x, 1.0 / n), 2.0 * kPi * k / n);
      EXPECT_LE(testing::min_distance(root, eig), 1e-8) << n << " " << k;
    }
  }
}

TEST(Example2, RatioMatchesClosedFormAboveThreshold) {
  for (int n : {2, 4, 9}) {
    for (double x : {0.95, 1.0, 2.0, 5.0}) {
      for (double p : {0.5, 1.0, 2.0}) {
        const GalleryCase g = example2(n, x, p);
        const double c = std::cos(kPi / (n + 1));
        const double expected = n * std::pow(std::max(0.0, std::pow(x, 1.0 / n) - c), p) / std::pow(x, p);
        EXPECT_NEAR(g.closed_form, expected, 1e-13 * std::max(1.0, expected));
        EXPECT_TRUE(g.matches()) << n << " " << x << " " << p;
      }
    }
  }
}

TEST(Example2, BelowThresholdGivesZero) {
  const GalleryCase g = example2(4, 1e-3, 1.0);
  EXPECT_EQ(g.closed_form, 0.0);
  EXPECT_TRUE(g.matches());
  EXPECT_THROW(example2(1, 1.0, 1.0), DomainError);
}

TEST(Example2, MaximumForNTwo) {
  const Example2Max m = example2_maximum(2, 1.0);
  EXPECT_NEAR(m.max_closed, 1.0, 1e-14);
  EXPECT_NEAR(m.x_star_closed, 1.0, 1e-14);
  EXPECT_NEAR(m.max_numeric, 1.0, 1e-8);
  EXPECT_NEAR(m.x_star_numeric, 1.0, 1e-8);
}

TEST(Example2, MaximumForNFourHalf) {
  const Example2Max m = example2_maximum(4, 0.5);
  const double expected = std::pow(0.75 / std::cos(kPi / 5), 1.5) * 2.0;
  const double x_star = std::pow(4.0 / 3.0 * std::cos(kPi / 5), 4);
  EXPECT_NEAR(m.max_closed, expected, 1e-14);
  EXPECT_NEAR(m.max_numeric / expected, 1.0, 1e-8);
  EXPECT_NEAR(m.x_star_numeric / x_star, 1.0, 1e-8);
}

TEST(Example2, CounterexampleRegimeGrows) {
  EXPECT_GT(example2_max_closed(25, 0.5), 1.0);
  double prev = 0.0;
  for (int n : {8, 16, 32, 64}) {
    const GalleryCase g = example2_max_case(n, 0.5);
    EXPECT_TRUE(g.matches()) << n;
    EXPECT_NEAR(g.computed / example2_max_closed(n, 0.5), 1.0, 1e-8);
    EXPECT_GT(g.computed, prev);
    prev = g.computed;
  }
}

TEST(RemarkNew, LhsIsNRhsIsOne) {
  for (const auto& [n, p] : std::vector<std::pair<int, double>>{{3, 1.0}, {2, 2.0}, {6, 0.5}}) {
    const GalleryCase g = remark_new_demo(n, p);
    EXPECT_NEAR(g.extra("lhs"), n, 1e-12);
    EXPECT_NEAR(g.extra("rhs"), 1.0, 1e-12);
    EXPECT_LE(g.extra("normal_residual"), 1e-12);
    EXPECT_TRUE(g.matches());
  }
}

TEST(Prop2Unitary, BaseCase) {
  const CMatrix u = prop2_unitary(2);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(u(0, 0) - h), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(0, 1) - h), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 0) - h), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 1) + h), 0.0, 1e-15);
}

TEST(Prop2Unitary, OrthogonalWithFlatFirstColumn) {
  for (int n : {2, 3, 4, 9, 32, 64}) {
    const CMatrix u = prop2_unitary(n);
    EXPECT_LE((u * u.adjoint() - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12) << n;
    EXPECT_LE(u.imag().cwiseAbs().maxCoeff(), 0.0);
    double col = 0.0;
    for (int k = 0; k < n; ++k) {
      EXPECT_NEAR(u(k, 0).real(), 1.0 / std::sqrt(n), 1e-14);
      col += std::norm(u(k, 0));
    }
    EXPECT_NEAR(col, 1.0, 1e-14);
  }
}

TEST(Prop2Family, FirstOrderShiftIsXOverN) {
  const int n = 5;
  const double x = 1e-4;
  std::vector<double> alpha{0.0, 1.0, 2.0, 3.0, 4.0};
  const auto [a, b] = prop2_pair(alpha, x);
  EXPECT_LE((b - b.adjoint()).norm(), 1e-15);
  const RVector ev = hermitian_eigenvalues(b);
  for (int k = 0; k < n; ++k) EXPECT_NEAR(ev(k) - alpha[k], x / n, 1e-7);
}

TEST(Prop2Family, RatioTendsToNToOneMinusP) {
  const Prop2Result r4 = prop2_family(4, 0.5);
  EXPECT_TRUE(r4.first_order_ok);
  EXPECT_TRUE(r4.monotone_ok);
  EXPECT_LT(r4.final_error, 1e-2);
  EXPECT_NEAR(r4.gallery.closed_form, 2.0, 1e-15);

  const Prop2Result r2 = prop2_family(2, 1.0);
  EXPECT_NEAR(r2.schedule.back().ratio, 1.0, 1e-2);

  const GalleryCase g9 = prop2_case(9, 0.5, 1e-5);
  EXPECT_NEAR(g9.computed, 3.0, 1e-2);
  EXPECT_GT(g9.computed, 1.0);
  EXPECT_TRUE(g9.matches());
}

TEST(Prop2Family, ScheduleHalvesEightTimes) {
  const std::vector<double> s = prop2_schedule();
  ASSERT_EQ(s.size(), 9u);
  EXPECT_EQ(s.front(), 1e-2);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_EQ(s[i], s[i - 1] / 2.0);
}

TEST(Prop2Family, Errors) {
  EXPECT_THROW(prop2_family(3, 0.5, {0.0, 0.0, 1.0}), DomainError);
  EXPECT_THROW(prop2_family(3, 0.5, {0.0, 1.0}), DomainError);
  EXPECT_THROW(prop2_family(3, 0.5, {0.0, 1e-6, 1.0}, 1e-2), DomainError);
  EXPECT_THROW(prop2_unitary(1), DomainError);
}

}  // namespace
}  // namespace spectra
