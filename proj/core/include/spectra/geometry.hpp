#pragma once

#include <complex>
#include <vector>

namespace spectra::geometry {

using Point = std::complex<double>;

/// z-component of (b − a) × (c − a).
double cross(Point a, Point b, Point c);

/// Convex hull in counter-clockwise order without collinear vertices.
/// Degenerate inputs give one vertex (a point) or two (a segment).
std::vector<Point> convex_hull(std::vector<Point> pts);

double distance_to_segment(Point p, Point a, Point b);

/// Nearest point of the closed segment [a, b] to p.
Point project_to_segment(Point p, Point a, Point b);

/// Euclidean distance from p to a convex polygon given counter-clockwise
/// (zero inside). One- and two-vertex polygons are a point and a segment.
double distance_to_convex(const std::vector<Point>& poly, Point p);

/// Intersection of a convex counter-clockwise polygon with the half-plane
/// { z : Re(e^{−iθ} z) ≤ s }.
std::vector<Point> clip_halfplane(const std::vector<Point>& poly, double theta, double s);

}  // namespace spectra::geometry
