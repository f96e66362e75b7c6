#include "vclone/geometry.hpp"

#include <algorithm>

namespace vclone {

Line perpendicular_bisector(Point2 a, Point2 b) {
  if (dist(a, b) <= kTol) {
    throw DegenerateInput("perpendicular_bisector: points coincide");
  }
  Point2 mid = 0.5 * (a + b);
  return Line{mid, normalized(perp(b - a))};
}

Point2 circumcenter(Point2 a, Point2 b, Point2 c) {
  double det = 2.0 * orient(a, b, c);
  if (std::abs(det) <= kTol) {
    throw CollinearInput("circumcenter: collinear input");
  }
  double a2 = norm2(a), b2 = norm2(b), c2 = norm2(c);
  double ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / det;
  double uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / det;
  return {ux, uy};
}

std::vector<Point2> circle_intersections(const Circle& c1, const Circle& c2) {
  double d = dist(c1.center, c2.center);
  if (d <= kTol && std::abs(c1.radius - c2.radius) <= kTol) {
    throw CoincidentCircles("circle_intersections: coincident circles");
  }
  if (d <= kTol) return {};  // concentric, different radii
  double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
  double h2 = c1.radius * c1.radius - a * a;
  double scale = std::max({1.0, c1.radius, c2.radius});
  Point2 u = normalized(c2.center - c1.center);
  Point2 base = c1.center + a * u;
  if (h2 < -kTol * scale) return {};
  if (h2 <= kTol * scale) return {base};  // tangent
  double h = std::sqrt(h2);
  Point2 n = perp(u);
  return {base + h * n, base + (-h) * n};
}

double breakpoint_x(Point2 left_site, Point2 right_site, double sweep_y) {
  double dl = left_site.y - sweep_y;
  double dr = right_site.y - sweep_y;
  // focus on the directrix: the parabola collapses to a vertical ray
  if (std::abs(dl) <= kTol && std::abs(dr) <= kTol) {
    return 0.5 * (left_site.x + right_site.x);
  }
  if (std::abs(dl) <= kTol) return left_site.x;
  if (std::abs(dr) <= kTol) return right_site.x;

  if (std::abs(dl - dr) <= kTol) {
    return 0.5 * (left_site.x + right_site.x);  // equal heights -> midline
  }
  double d1 = 1.0 / (2.0 * dl);
  double d2 = 1.0 / (2.0 * dr);
  double a = d1 - d2;
  double b = -2.0 * (d1 * left_site.x - d2 * right_site.x);
  double c = d1 * left_site.x * left_site.x - d2 * right_site.x * right_site.x +
             0.5 * (left_site.y - right_site.y);
  double disc = std::max(0.0, b * b - 4.0 * a * c);
  // (-b + sqrt)/2a is the smaller root for a<0 (left site higher), which is
  // the intersection ordering the higher site's arc on the left.
  return (-b + std::sqrt(disc)) / (2.0 * a);
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  Point2 ab = b - a;
  double len2 = norm2(ab);
  if (len2 <= kTol * kTol) return dist(p, a);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(p, a + t * ab);
}

}  // namespace vclone
