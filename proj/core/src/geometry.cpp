#include "spectra/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spectra::geometry {

double cross(Point a, Point b, Point c) {
  const Point u = b - a;
  const Point v = c - a;
  return u.real() * v.imag() - u.imag() * v.real();
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Point project_to_segment(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return a;
  const double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return a + t * d;
}

double distance_to_segment(Point p, Point a, Point b) { return std::abs(p - project_to_segment(p, a, b)); }

double distance_to_convex(const std::vector<Point>& poly, Point p) {
  if (poly.empty()) return std::numeric_limits<double>::infinity();
  if (poly.size() == 1) return std::abs(p - poly.front());
  if (poly.size() == 2) return distance_to_segment(p, poly[0], poly[1]);

  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly[i];
    const Point b = poly[(i + 1) % poly.size()];
    if (cross(a, b, p) < 0.0) inside = false;
    best = std::min(best, distance_to_segment(p, a, b));
  }
  return inside ? 0.0 : best;
}

std::vector<Point> clip_halfplane(const std::vector<Point>& poly, double theta, double s) {
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  auto value = [&](Point z) { return c * z.real() + sn * z.imag() - s; };

  std::vector<Point> out;
  out.reserve(poly.size() + 1);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point cur = poly[i];
    const Point nxt = poly[(i + 1) % poly.size()];
    const double vc = value(cur);
    const double vn = value(nxt);
    if (vc <= 0.0) out.push_back(cur);
    if ((vc < 0.0 && vn > 0.0) || (vc > 0.0 && vn < 0.0)) {
      const double t = vc / (vc - vn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

}  // namespace spectra::geometry
