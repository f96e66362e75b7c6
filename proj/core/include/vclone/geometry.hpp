#pragma once

#include <cmath>
#include <vector>

#include "vclone/errors.hpp"

namespace vclone {

// Global comparison tolerance. Instance generators guarantee feature
// separations well above this, so thresholded doubles are safe here and
// exact predicates stay out of scope.
inline constexpr double kTol = 1e-9;

// A probe "hits" an edge or vertex when distances to several sites agree
// within this; cloners deliberately probe equidistant points, so the tie
// window must absorb accumulated float error.
inline constexpr double kTieTol = 10.0 * kTol;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point2 a) { return dot(a, a); }
inline double norm(Point2 a) { return std::sqrt(norm2(a)); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 normalized(Point2 a) {
  double n = norm(a);
  return {a.x / n, a.y / n};
}
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }

// twice the signed area of triangle abc; >0 for counterclockwise
inline double orient(Point2 a, Point2 b, Point2 c) {
  return cross(b - a, c - a);
}

struct BoundingBox {
  Point2 lo{0.0, 0.0};
  Point2 hi{1.0, 1.0};

  bool contains(Point2 p, double slack = kTol) const {
    return p.x >= lo.x - slack && p.x <= hi.x + slack &&
           p.y >= lo.y - slack && p.y <= hi.y + slack;
  }
  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  double area() const { return width() * height(); }
};

struct Circle {
  Point2 center;
  double radius = 0.0;  // >= 0
};

// point + unit direction
struct Line {
  Point2 point;
  Point2 dir;
};

// All points of the returned line are equidistant from a and b.
Line perpendicular_bisector(Point2 a, Point2 b);

// Equidistant from all three inputs; throws CollinearInput when the
// orientation determinant is below tolerance.
Point2 circumcenter(Point2 a, Point2 b, Point2 c);

// Zero, one (tangent) or two intersection points, "+" branch first.
// Coincident circles (same center and radius) have no finite answer.
std::vector<Point2> circle_intersections(const Circle& c1, const Circle& c2);

// x-coordinate where the parabolas with foci left_site/right_site and
// directrix y = sweep_y meet, picking the root that puts left_site's arc
// left of right_site's arc. A focus on the directrix degenerates to a
// vertical ray; the breakpoint is that focus' x.
double breakpoint_x(Point2 left_site, Point2 right_site, double sweep_y);

// Segment/segment-free distance helpers used by diagram comparison.
double point_segment_distance(Point2 p, Point2 a, Point2 b);

}  // namespace vclone
