#pragma once

#include <optional>
#include <vector>

#include "proxtri/delaunay.hpp"
#include "proxtri/geometry.hpp"

namespace proxtri {

/// Axis-aligned clip rectangle for unbounded cells.
struct Frame {
  Rational x0, y0, x1, y1;

  Polygon to_polygon() const;
  /// Strictly inside (not on the border).
  bool strictly_contains(const Point& p) const;
  /// On the border rectangle.
  bool on_border(const Point& p) const;
};

/// Cell edge with the site on its other side, or none when the edge is part
/// of the clip frame.
struct CellEdge {
  Segment segment;
  std::optional<SiteIndex> neighbor;

  bool on_frame() const noexcept { return !neighbor.has_value(); }
};

struct VoronoiCell {
  SiteIndex site = 0;
  Polygon polygon;
  bool unbounded = false;  // the true cell extends past the frame
  std::vector<CellEdge> edges;  // counterclockwise
};

class VoronoiDiagram {
 public:
  VoronoiDiagram(SiteSet sites, Frame frame, std::vector<VoronoiCell> cells, std::vector<Point> vertices);

  const SiteSet& sites() const noexcept { return sites_; }
  const Frame& frame() const noexcept { return frame_; }
  const std::vector<VoronoiCell>& cells() const noexcept { return cells_; }
  /// Throws IndexOutOfRange.
  const VoronoiCell& cell(SiteIndex i) const;
  /// Distinct Voronoi vertices (Delaunay circumcenters), sorted.
  const std::vector<Point>& vertices() const noexcept { return vertices_; }

 private:
  SiteSet sites_;
  Frame frame_;
  std::vector<VoronoiCell> cells_;
  std::vector<Point> vertices_;
};

/// Bounding box of the sites and every circumcenter of the mesh, grown on
/// each side by twice its half-perimeter (at least twice its diagonal).
Frame default_frame(const TriMesh& mesh);

/// Dual of triangulate(sites): each cell is the frame clipped by the bisector
/// half-planes of the site's Delaunay neighbors. Throws FrameTooSmall when
/// the frame does not strictly contain every site and circumcenter, plus
/// triangulate's errors.
VoronoiDiagram voronoi_diagram(const SiteSet& sites, const std::optional<Frame>& frame = std::nullopt);
VoronoiDiagram voronoi_diagram(const TriMesh& mesh, const std::optional<Frame>& frame = std::nullopt);

/// The single point shared by the closed cells of p, q and r, or nothing
/// when they have no common point. Throws DegenerateIntersection when that
/// point also belongs to a fourth cell (four or more cocircular sites), and
/// IndexOutOfRange unless the indices are valid and distinct.
std::optional<Point> common_vertex(const VoronoiDiagram& diagram, SiteIndex p, SiteIndex q, SiteIndex r);

/// Closed cells meet in a segment of positive length that is not part of
/// the clip frame. Throws IndexOutOfRange (also for p == q).
bool cells_strongly_near(const VoronoiDiagram& diagram, SiteIndex p, SiteIndex q);

/// Intersection of the closed cells of p and q.
Shape cell_intersection(const VoronoiDiagram& diagram, SiteIndex p, SiteIndex q);

}  // namespace proxtri
