// Delaunay-side predicates decided through the Voronoi diagram.

#include <string>

#include "proxtri/delaunay.hpp"
#include "proxtri/error.hpp"
#include "proxtri/voronoi.hpp"

namespace proxtri {

bool is_delaunay_edge(const TriMesh& mesh, const VoronoiDiagram& diagram, SiteIndex p, SiteIndex q) {
  if (!mesh.sites().contains_index(p) || !mesh.sites().contains_index(q) || p == q) {
    throw Error(ErrorCode::IndexOutOfRange,
                "is_delaunay_edge needs two distinct valid sites, got " + std::to_string(p) + ", " + std::to_string(q));
  }
  return cells_strongly_near(diagram, p, q);
}

bool is_delaunay_triangle(const TriMesh& mesh, const VoronoiDiagram& diagram, TriangleId t) {
  const Triangle& tri = mesh.triangle(t);
  const Point center = circumcircle(mesh.point(tri[0]), mesh.point(tri[1]), mesh.point(tri[2])).center;
  const Shape pq = cell_intersection(diagram, tri[0], tri[1]);
  const Shape triple = intersect_closures(pq, diagram.cell(tri[2]).polygon);
  const auto* u = std::get_if<Point>(&triple);
  return u != nullptr && *u == center;
}

}  // namespace proxtri
