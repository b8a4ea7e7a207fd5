#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "proxtri/delaunay.hpp"
#include "proxtri/geometry.hpp"

namespace proxtri {

/// Finite set of points; its closure is itself.
struct PointSet {
  std::vector<Point> points;
};

/// Anything the proximity relations accept. Polygons are closed regions.
using Geometry = std::variant<PointSet, Segment, Polygon>;

enum class Relation { Near, Far };

using Witness = std::variant<Point, Segment, Polygon>;

/// Outcome of a proximity query. A Near verdict always carries a witness
/// lying in both closures; `strongly` marks a positive-length common edge.
struct ProximityVerdict {
  Relation relation = Relation::Far;
  std::optional<Witness> witness;
  bool strongly = false;

  bool is_near() const noexcept { return relation == Relation::Near; }
};

/// A is near B when their closures meet. For convex operands the witness is
/// the whole closure intersection; otherwise it is one shared point.
ProximityVerdict near(const Geometry& a, const Geometry& b);

/// Closures are disjoint.
bool far(const Geometry& a, const Geometry& b);

/// The triangles share a full mesh edge. Throws IndexOutOfRange, including
/// for t1 == t2.
bool strongly_near_triangles(const TriMesh& mesh, TriangleId t1, TriangleId t2);

/// The closed triangles meet, decided from shared vertex indices. Reflexive.
/// Throws IndexOutOfRange.
bool triangles_near(const TriMesh& mesh, TriangleId t1, TriangleId t2);

/// The closed triangle t as a polygon.
Polygon triangle_polygon(const TriMesh& mesh, TriangleId t);

}  // namespace proxtri
