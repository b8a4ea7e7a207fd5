#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "proxtri/geometry.hpp"

namespace proxtri {

using SiteIndex = std::int32_t;
using TriangleId = std::int32_t;

/// Ordered list of distinct sites. Insertion order is preserved; indices into
/// it identify sites everywhere else.
class SiteSet {
 public:
  SiteSet() = default;
  /// Throws DuplicateSite when two points coincide.
  explicit SiteSet(std::vector<Point> points);

  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](SiteIndex i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::vector<Point>& points() const noexcept { return points_; }

  /// Index of an exactly matching site.
  std::optional<SiteIndex> find(const Point& p) const;

  bool contains_index(SiteIndex i) const noexcept { return i >= 0 && static_cast<std::size_t>(i) < size(); }

 private:
  std::vector<Point> points_;
  std::vector<SiteIndex> sorted_;  // indices ordered by point, for find()
};

/// Undirected edge, stored with u < v.
struct Edge {
  SiteIndex u = 0;
  SiteIndex v = 0;

  static Edge of(SiteIndex a, SiteIndex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeRecord {
  Edge edge;
  std::array<TriangleId, 2> triangles{-1, -1};  // second is -1 on the hull
  bool constrained = false;

  bool on_hull() const noexcept { return triangles[1] < 0; }
};

using Triangle = std::array<SiteIndex, 3>;

/// Index-based triangle mesh over a site set. Triangles are counterclockwise
/// with their smallest index first and are sorted, so two meshes with the
/// same triangles compare equal regardless of how they were built.
class TriMesh {
 public:
  /// Validates orientation and manifoldness and builds the edge table.
  /// Edges listed in `constrained` are flagged; each must be a mesh edge.
  static TriMesh from_triangles(SiteSet sites, std::vector<Triangle> triangles,
                                const std::vector<Edge>& constrained = {});

  const SiteSet& sites() const noexcept { return sites_; }
  const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
  const std::vector<EdgeRecord>& edges() const noexcept { return edges_; }
  std::size_t triangle_count() const noexcept { return triangles_.size(); }

  const Triangle& triangle(TriangleId t) const;
  bool contains_triangle(TriangleId t) const noexcept {
    return t >= 0 && static_cast<std::size_t>(t) < triangles_.size();
  }
  const Point& point(SiteIndex i) const { return sites_[i]; }

  /// Triangle across the edge opposite vertex k of t, or -1 on the hull.
  const std::array<TriangleId, 3>& neighbors(TriangleId t) const;

  const EdgeRecord* find_edge(SiteIndex a, SiteIndex b) const;
  /// Throws UnknownEdge.
  const EdgeRecord& edge(SiteIndex a, SiteIndex b) const;
  bool has_edge(SiteIndex a, SiteIndex b) const { return find_edge(a, b) != nullptr; }

  /// Sites joined to i by a mesh edge, ascending.
  std::vector<SiteIndex> vertex_neighbors(SiteIndex i) const;
  /// Triangles having i as a vertex, ascending.
  const std::vector<TriangleId>& incident_triangles(SiteIndex i) const;

  std::size_t hull_vertex_count() const;
  bool is_hull_vertex(SiteIndex i) const;

  friend bool operator==(const TriMesh& a, const TriMesh& b);

 private:
  SiteSet sites_;
  std::vector<Triangle> triangles_;
  std::vector<std::array<TriangleId, 3>> neighbors_;
  std::vector<EdgeRecord> edges_;  // sorted by edge
  std::vector<std::vector<TriangleId>> incident_;
};

/// Segments whose endpoints are sites (the constraint set L).
class ConstraintSet {
 public:
  ConstraintSet() = default;
  explicit ConstraintSet(std::vector<Segment> segments) : segments_(std::move(segments)) {}

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  bool empty() const noexcept { return segments_.empty(); }

  /// Resolves endpoints to site indices, dropping duplicates. Throws
  /// UnknownConstraintEndpoint.
  std::vector<Edge> resolve(const SiteSet& sites) const;

 private:
  std::vector<Segment> segments_;
};

/// Delaunay triangulation by incremental Bowyer-Watson insertion. Cocircular
/// ties are broken by symbolic perturbation (see incircle_sign_perturbed), so
/// the result is unique for a given site set and independent of site order.
/// Throws TooFewSites, AllCollinear.
TriMesh triangulate(const SiteSet& sites);

/// Constrained Delaunay triangulation: every constraint becomes a flagged
/// edge; other edges are locally Delaunay. Throws CrossingConstraints,
/// ConstraintThroughSite, UnknownConstraintEndpoint plus triangulate's errors.
TriMesh constrained_triangulate(const SiteSet& sites, const ConstraintSet& constraints);

/// Hull and constrained edges are locally Delaunay by definition; an
/// interior edge is when the vertex across it is not inside the circumcircle
/// of the triangle on the other side. Throws UnknownEdge.
bool is_locally_delaunay(const TriMesh& mesh, Edge e);

/// No other site lies in the open segment pq and no constraint other than pq
/// itself meets the open segment. Throws IndexOutOfRange.
bool is_visible(const SiteSet& sites, const ConstraintSet& constraints, SiteIndex p, SiteIndex q);

/// pq is a constraint, or p and q see each other and some circle through
/// both encloses no site visible from the open segment pq.
bool is_constrained_delaunay_edge(const SiteSet& sites, const ConstraintSet& constraints,
                                  SiteIndex p, SiteIndex q);

/// Triangles sharing an edge with t, ascending. Throws IndexOutOfRange.
std::vector<TriangleId> adjacency(const TriMesh& mesh, TriangleId t);

class VoronoiDiagram;

/// Decided on the Voronoi side only: the cells of p and q meet in a segment
/// of positive length. Throws IndexOutOfRange (including p == q).
bool is_delaunay_edge(const TriMesh& mesh, const VoronoiDiagram& diagram, SiteIndex p, SiteIndex q);

/// The closed cells of the triangle's vertices meet exactly in its
/// circumcenter. Throws IndexOutOfRange.
bool is_delaunay_triangle(const TriMesh& mesh, const VoronoiDiagram& diagram, TriangleId t);

}  // namespace proxtri
