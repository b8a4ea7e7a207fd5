#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "proxtri/point.hpp"
#include "proxtri/predicates.hpp"

namespace proxtri {

/// Closed straight segment with distinct endpoints.
class Segment {
 public:
  /// Throws InvalidGeometry when a == b.
  Segment(Point a, Point b);

  const Point& a() const noexcept { return a_; }
  const Point& b() const noexcept { return b_; }

  /// Same point set, endpoints in lexicographic order.
  Segment canonical() const;

  /// Equal as point sets (endpoint order ignored).
  friend bool operator==(const Segment& s, const Segment& t);

 private:
  Point a_;
  Point b_;
};

/// Simple polygon, counterclockwise, normalized: no repeated or collinear
/// consecutive vertices, lexicographically smallest vertex first. Two
/// polygons covering the same region with the same boundary compare equal.
class Polygon {
 public:
  /// Normalizes and validates. Throws InvalidGeometry when fewer than three
  /// vertices survive normalization, the boundary self-intersects, or the
  /// signed area is not positive.
  explicit Polygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  Segment edge(std::size_t i) const { return Segment(vertices_[i], vertices_[(i + 1) % size()]); }

  /// Twice the signed area (exact, always positive).
  Rational twice_area() const;

  friend bool operator==(const Polygon& p, const Polygon& q) { return p.vertices_ == q.vertices_; }

 private:
  std::vector<Point> vertices_;
};

/// Circle through three points. The radius is kept squared so that it stays
/// rational.
struct CircumCircle {
  Point center;
  Rational radius_sq;

  /// Decimal approximation of the (generally irrational) radius.
  double approximate_radius() const;
};

enum class PointLocation { Interior, Boundary, Exterior };

/// Empty intersection marker.
struct Empty {
  friend bool operator==(const Empty&, const Empty&) { return true; }
};

/// Closed convex point sets produced by intersections.
using Shape = std::variant<Empty, Point, Segment, Polygon>;

using SegmentIntersection = std::variant<Empty, Point, Segment>;

/// Throws CollinearInput when a, b, c are collinear.
CircumCircle circumcircle(const Point& a, const Point& b, const Point& c);

/// Exact intersection of two closed segments. An overlap is returned in
/// canonical (lexicographic) endpoint order.
SegmentIntersection segment_intersection(const Segment& s, const Segment& t);

/// Sutherland-Hodgman clipping of p against the half-planes of q. Returns
/// nothing when the intersection has zero area. Throws NonConvexInput.
std::optional<Polygon> convex_polygon_intersection(const Polygon& p, const Polygon& q);

bool is_convex_polygon(const Polygon& p);

/// Interior/boundary/exterior with respect to a closed segment (boundary =
/// the two endpoints) or a closed polygonal region (boundary = edge cycle).
PointLocation locate_point(const Point& p, const Segment& s);
PointLocation locate_point(const Point& p, const Polygon& poly);
PointLocation locate_point(const Point& p, const Shape& shape);

/// Closure intersection of two convex shapes: the convex hull of every vertex
/// of one lying in the other plus all edge/edge intersection points. Any
/// dimension of result can come back, unlike convex_polygon_intersection.
Shape intersect_closures(const Shape& a, const Shape& b);

/// Convex hull of a point set, classified by dimension.
Shape convex_hull(std::span<const Point> points);

/// Shoelace formula, twice the signed area of a vertex loop.
Rational twice_signed_area(std::span<const Point> loop);

bool is_empty(const Shape& s);

}  // namespace proxtri
