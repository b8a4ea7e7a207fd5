#include "proxtri/proximity.hpp"

#include <algorithm>
#include <string>

#include "proxtri/error.hpp"

namespace proxtri {
namespace {

bool is_convex(const Geometry& g) {
  if (const auto* set = std::get_if<PointSet>(&g)) return set->points.size() == 1;
  if (const auto* poly = std::get_if<Polygon>(&g)) return is_convex_polygon(*poly);
  return true;
}

Shape as_shape(const Geometry& g) {
  if (const auto* set = std::get_if<PointSet>(&g)) return set->points.front();
  if (const auto* seg = std::get_if<Segment>(&g)) return *seg;
  return std::get<Polygon>(g);
}

std::vector<Segment> edges_of(const Geometry& g) {
  if (const auto* seg = std::get_if<Segment>(&g)) return {*seg};
  std::vector<Segment> out;
  if (const auto* poly = std::get_if<Polygon>(&g)) {
    for (std::size_t i = 0; i < poly->size(); ++i) out.push_back(poly->edge(i));
  }
  return out;
}

std::vector<Point> points_of(const Geometry& g) {
  if (const auto* set = std::get_if<PointSet>(&g)) return set->points;
  if (const auto* seg = std::get_if<Segment>(&g)) return {seg->a(), seg->b()};
  return std::get<Polygon>(g).vertices();
}

PointLocation locate(const Point& p, const Geometry& g) {
  if (const auto* set = std::get_if<PointSet>(&g)) {
    return std::find(set->points.begin(), set->points.end(), p) != set->points.end() ? PointLocation::Boundary
                                                                                      : PointLocation::Exterior;
  }
  if (const auto* seg = std::get_if<Segment>(&g)) return locate_point(p, *seg);
  return locate_point(p, std::get<Polygon>(g));
}

ProximityVerdict near_at(const Point& p) { return ProximityVerdict{Relation::Near, Witness{p}, false}; }

void check_triangle(const TriMesh& mesh, TriangleId t) {
  if (!mesh.contains_triangle(t)) throw Error(ErrorCode::IndexOutOfRange, "triangle id " + std::to_string(t));
}

int shared_vertices(const TriMesh& mesh, TriangleId t1, TriangleId t2) {
  const Triangle& a = mesh.triangles()[static_cast<std::size_t>(t1)];
  const Triangle& b = mesh.triangles()[static_cast<std::size_t>(t2)];
  int count = 0;
  for (SiteIndex v : a) count += static_cast<int>(std::count(b.begin(), b.end(), v));
  return count;
}

}  // namespace

ProximityVerdict near(const Geometry& a, const Geometry& b) {
  if (const auto* set = std::get_if<PointSet>(&a); set && set->points.empty()) return {};
  if (const auto* set = std::get_if<PointSet>(&b); set && set->points.empty()) return {};

  if (is_convex(a) && is_convex(b)) {
    const Shape shared = intersect_closures(as_shape(a), as_shape(b));
    if (is_empty(shared)) return {};
    ProximityVerdict verdict;
    verdict.relation = Relation::Near;
    std::visit(
        [&verdict](const auto& s) {
          if constexpr (!std::is_same_v<std::decay_t<decltype(s)>, Empty>) verdict.witness = Witness{s};
        },
        shared);
    verdict.strongly = std::holds_alternative<Segment>(shared);
    return verdict;
  }

  // General case: a shared point is either a vertex of one operand inside
  // the other or a crossing of their boundaries.
  for (const Point& p : points_of(a)) {
    if (locate(p, b) != PointLocation::Exterior) return near_at(p);
  }
  for (const Point& p : points_of(b)) {
    if (locate(p, a) != PointLocation::Exterior) return near_at(p);
  }
  for (const Segment& ea : edges_of(a)) {
    for (const Segment& eb : edges_of(b)) {
      auto hit = segment_intersection(ea, eb);
      if (const auto* p = std::get_if<Point>(&hit)) return near_at(*p);
      if (const auto* s = std::get_if<Segment>(&hit)) return near_at(s->a());
    }
  }
  return {};
}

bool far(const Geometry& a, const Geometry& b) { return !near(a, b).is_near(); }

bool strongly_near_triangles(const TriMesh& mesh, TriangleId t1, TriangleId t2) {
  check_triangle(mesh, t1);
  check_triangle(mesh, t2);
  if (t1 == t2) throw Error(ErrorCode::IndexOutOfRange, "strong proximity needs two distinct triangles");
  return shared_vertices(mesh, t1, t2) == 2;
}

bool triangles_near(const TriMesh& mesh, TriangleId t1, TriangleId t2) {
  check_triangle(mesh, t1);
  check_triangle(mesh, t2);
  return shared_vertices(mesh, t1, t2) > 0;
}

Polygon triangle_polygon(const TriMesh& mesh, TriangleId t) {
  const Triangle& tri = mesh.triangle(t);
  return Polygon({mesh.point(tri[0]), mesh.point(tri[1]), mesh.point(tri[2])});
}

}  // namespace proxtri
