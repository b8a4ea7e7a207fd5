#include "proxtri/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "proxtri/error.hpp"

namespace proxtri {
namespace {

void drop_repeats_and_collinear(std::vector<Point>& loop) {
  bool changed = true;
  while (changed && loop.size() >= 2) {
    changed = false;
    for (std::size_t i = 0; i < loop.size() && loop.size() >= 2; ++i) {
      const std::size_t next = (i + 1) % loop.size();
      if (loop[i] == loop[next]) {
        loop.erase(loop.begin() + static_cast<std::ptrdiff_t>(next));
        changed = true;
        break;
      }
    }
    if (changed || loop.size() < 3) continue;
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const std::size_t prev = (i + loop.size() - 1) % loop.size();
      const std::size_t next = (i + 1) % loop.size();
      if (orientation(loop[prev], loop[i], loop[next]) == Orientation::Collinear) {
        loop.erase(loop.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
}

bool is_simple_loop(const std::vector<Point>& loop) {
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    Segment ei(loop[i], loop[(i + 1) % n]);
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
      Segment ej(loop[j], loop[(j + 1) % n]);
      if (!std::holds_alternative<Empty>(segment_intersection(ei, ej))) return false;
    }
  }
  return true;
}

// Point on segment uw where the line through e0, e1 crosses it, given the
// signed side values of u and w.
Point interpolate(const Point& u, const Point& w, const Rational& fu, const Rational& fw) {
  Rational t = fu / (fu - fw);
  return Point(u.x() + t * (w.x() - u.x()), u.y() + t * (w.y() - u.y()));
}

Rational side_value(const Point& e0, const Point& e1, const Point& x) {
  return (e1.x() - e0.x()) * (x.y() - e0.y()) - (e1.y() - e0.y()) * (x.x() - e0.x());
}

std::vector<Point> shape_vertices(const Shape& s) {
  return std::visit(
      [](const auto& v) -> std::vector<Point> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Empty>) {
          return {};
        } else if constexpr (std::is_same_v<T, Point>) {
          return {v};
        } else if constexpr (std::is_same_v<T, Segment>) {
          return {v.a(), v.b()};
        } else {
          return v.vertices();
        }
      },
      s);
}

std::vector<Segment> shape_edges(const Shape& s) {
  if (const auto* seg = std::get_if<Segment>(&s)) return {*seg};
  if (const auto* poly = std::get_if<Polygon>(&s)) {
    std::vector<Segment> out;
    out.reserve(poly->size());
    for (std::size_t i = 0; i < poly->size(); ++i) out.push_back(poly->edge(i));
    return out;
  }
  return {};
}

}  // namespace

Segment::Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == b_) throw Error(ErrorCode::InvalidGeometry, "segment endpoints coincide");
}

Segment Segment::canonical() const { return a_ < b_ ? *this : Segment(b_, a_); }

bool operator==(const Segment& s, const Segment& t) {
  return (s.a_ == t.a_ && s.b_ == t.b_) || (s.a_ == t.b_ && s.b_ == t.a_);
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  drop_repeats_and_collinear(vertices_);
  if (vertices_.size() < 3) {
    throw Error(ErrorCode::InvalidGeometry, "polygon needs at least three non-collinear vertices");
  }
  if (sgn(twice_signed_area(vertices_)) <= 0) {
    throw Error(ErrorCode::InvalidGeometry, "polygon must be counterclockwise with positive area");
  }
  if (!is_simple_loop(vertices_)) {
    throw Error(ErrorCode::InvalidGeometry, "polygon boundary self-intersects");
  }
  auto smallest = std::min_element(vertices_.begin(), vertices_.end());
  std::rotate(vertices_.begin(), smallest, vertices_.end());
}

Rational Polygon::twice_area() const { return twice_signed_area(vertices_); }

double CircumCircle::approximate_radius() const { return std::sqrt(radius_sq.get_d()); }

Rational twice_signed_area(std::span<const Point> loop) {
  Rational sum = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Point& p = loop[i];
    const Point& q = loop[(i + 1) % loop.size()];
    sum += p.x() * q.y() - q.x() * p.y();
  }
  return sum;
}

CircumCircle circumcircle(const Point& a, const Point& b, const Point& c) {
  if (orientation(a, b, c) == Orientation::Collinear) {
    throw Error(ErrorCode::CollinearInput, "collinear points have no finite circumcircle");
  }
  Rational bx = b.x() - a.x(), by = b.y() - a.y();
  Rational cx = c.x() - a.x(), cy = c.y() - a.y();
  Rational d = 2 * (bx * cy - by * cx);
  Rational b2 = bx * bx + by * by;
  Rational c2 = cx * cx + cy * cy;
  Rational ux = (cy * b2 - by * c2) / d;
  Rational uy = (bx * c2 - cx * b2) / d;
  Rational r2 = ux * ux + uy * uy;
  return CircumCircle{Point(a.x() + ux, a.y() + uy), r2};
}

SegmentIntersection segment_intersection(const Segment& s, const Segment& t) {
  const Point& a = s.a();
  const Point& b = s.b();
  const Point& c = t.a();
  const Point& d = t.b();
  const int o1 = static_cast<int>(orientation(a, b, c));
  const int o2 = static_cast<int>(orientation(a, b, d));

  if (o1 == 0 && o2 == 0) {
    // Collinear carriers: overlap of the two lexicographic intervals.
    const Point& s_lo = std::min(a, b);
    const Point& s_hi = std::max(a, b);
    const Point& t_lo = std::min(c, d);
    const Point& t_hi = std::max(c, d);
    const Point& lo = std::max(s_lo, t_lo);
    const Point& hi = std::min(s_hi, t_hi);
    if (hi < lo) return Empty{};
    if (hi == lo) return lo;
    return Segment(lo, hi);
  }

  const int o3 = static_cast<int>(orientation(c, d, a));
  const int o4 = static_cast<int>(orientation(c, d, b));
  if (o1 * o2 > 0 || o3 * o4 > 0) return Empty{};

  // Proper crossing or touching; solve a + u (b - a) on the line cd.
  if (o1 == 0) return c;
  if (o2 == 0) return d;
  if (o3 == 0) return a;
  if (o4 == 0) return b;
  Rational fa = side_value(c, d, a);
  Rational fb = side_value(c, d, b);
  return interpolate(a, b, fa, fb);
}

bool is_convex_polygon(const Polygon& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(p[(i + n - 1) % n], p[i], p[(i + 1) % n]) == Orientation::CW) return false;
  }
  return true;
}

std::optional<Polygon> convex_polygon_intersection(const Polygon& p, const Polygon& q) {
  if (!is_convex_polygon(p) || !is_convex_polygon(q)) {
    throw Error(ErrorCode::NonConvexInput, "convex_polygon_intersection needs convex inputs");
  }
  std::vector<Point> current = p.vertices();
  for (std::size_t e = 0; e < q.size() && !current.empty(); ++e) {
    const Point& e0 = q[e];
    const Point& e1 = q[(e + 1) % q.size()];
    std::vector<Point> next;
    next.reserve(current.size() + 1);
    for (std::size_t i = 0; i < current.size(); ++i) {
      const Point& u = current[i];
      const Point& w = current[(i + 1) % current.size()];
      Rational fu = side_value(e0, e1, u);
      Rational fw = side_value(e0, e1, w);
      const bool u_in = sgn(fu) >= 0;
      const bool w_in = sgn(fw) >= 0;
      if (u_in) next.push_back(u);
      if (u_in != w_in && sgn(fu) != 0 && sgn(fw) != 0) next.push_back(interpolate(u, w, fu, fw));
    }
    current = std::move(next);
  }
  drop_repeats_and_collinear(current);
  if (current.size() < 3 || sgn(twice_signed_area(current)) <= 0) return std::nullopt;
  return Polygon(std::move(current));
}

PointLocation locate_point(const Point& p, const Segment& s) {
  if (orientation(s.a(), s.b(), p) != Orientation::Collinear) return PointLocation::Exterior;
  if (p == s.a() || p == s.b()) return PointLocation::Boundary;
  const Point& lo = std::min(s.a(), s.b());
  const Point& hi = std::max(s.a(), s.b());
  if (lo < p && p < hi) return PointLocation::Interior;
  return PointLocation::Exterior;
}

PointLocation locate_point(const Point& p, const Polygon& poly) {
  const std::size_t n = poly.size();
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& u = poly[i];
    const Point& v = poly[(i + 1) % n];
    const Orientation o = orientation(u, v, p);
    if (o == Orientation::Collinear && locate_point(p, Segment(u, v)) != PointLocation::Exterior) {
      return PointLocation::Boundary;
    }
    if (u.y() <= p.y()) {
      if (v.y() > p.y() && o == Orientation::CCW) ++winding;
    } else if (v.y() <= p.y() && o == Orientation::CW) {
      --winding;
    }
  }
  return winding != 0 ? PointLocation::Interior : PointLocation::Exterior;
}

PointLocation locate_point(const Point& p, const Shape& shape) {
  return std::visit(
      [&p](const auto& s) -> PointLocation {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Empty>) {
          return PointLocation::Exterior;
        } else if constexpr (std::is_same_v<T, Point>) {
          return p == s ? PointLocation::Boundary : PointLocation::Exterior;
        } else {
          return locate_point(p, s);
        }
      },
      shape);
}

Shape convex_hull(std::span<const Point> input) {
  std::vector<Point> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return Empty{};
  if (pts.size() == 1) return pts.front();

  // Andrew's monotone chain keeping strict turns only.
  std::vector<Point> hull;
  hull.reserve(2 * pts.size());
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (const Point& p : pts) {
      while (hull.size() >= base + 2 &&
             orientation(hull[hull.size() - 2], hull.back(), p) != Orientation::CCW) {
        hull.pop_back();
      }
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  if (hull.size() < 3) return Segment(pts.front(), pts.back());
  return Polygon(std::move(hull));
}

Shape intersect_closures(const Shape& a, const Shape& b) {
  if (is_empty(a) || is_empty(b)) return Empty{};
  std::vector<Point> candidates;
  for (const Point& v : shape_vertices(a)) {
    if (locate_point(v, b) != PointLocation::Exterior) candidates.push_back(v);
  }
  for (const Point& v : shape_vertices(b)) {
    if (locate_point(v, a) != PointLocation::Exterior) candidates.push_back(v);
  }
  const auto edges_a = shape_edges(a);
  const auto edges_b = shape_edges(b);
  for (const Segment& ea : edges_a) {
    for (const Segment& eb : edges_b) {
      auto hit = segment_intersection(ea, eb);
      if (const auto* pt = std::get_if<Point>(&hit)) {
        candidates.push_back(*pt);
      } else if (const auto* seg = std::get_if<Segment>(&hit)) {
        candidates.push_back(seg->a());
        candidates.push_back(seg->b());
      }
    }
  }
  return convex_hull(candidates);
}

bool is_empty(const Shape& s) { return std::holds_alternative<Empty>(s); }

}  // namespace proxtri
