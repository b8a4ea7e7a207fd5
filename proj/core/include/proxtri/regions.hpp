#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "proxtri/delaunay.hpp"
#include "proxtri/geometry.hpp"

namespace proxtri {

/// A collection of mesh triangles, sorted ascending, tied to its mesh.
class Region {
 public:
  Region(std::shared_ptr<const TriMesh> mesh, std::vector<TriangleId> triangles);

  const std::vector<TriangleId>& triangles() const noexcept { return triangles_; }
  const TriMesh& mesh() const noexcept { return *mesh_; }
  const std::shared_ptr<const TriMesh>& mesh_ptr() const noexcept { return mesh_; }
  std::size_t size() const noexcept { return triangles_.size(); }
  bool contains(TriangleId t) const;

 private:
  std::shared_ptr<const TriMesh> mesh_;
  std::vector<TriangleId> triangles_;
};

enum class RegionMode {
  /// Maximal sets of pairwise strongly near triangles (the default).
  Clique,
  /// Connected components of the strong-proximity graph, for comparison.
  ConnectedComponent,
};

/// Regions of the mesh, each reported once, sorted by member list.
std::vector<Region> extract_regions(std::shared_ptr<const TriMesh> mesh, RegionMode mode = RegionMode::Clique);

/// Index pairs (i < j) of regions whose triangles share a mesh vertex.
/// Throws MixedMeshes.
std::vector<std::pair<std::size_t, std::size_t>> proximal_region_pairs(const std::vector<Region>& regions);

/// Outer boundary of the union of the member triangles. Throws UnionHasHole
/// when the boundary is not a single simple loop.
Polygon region_union_polygon(const Region& region);

bool is_region_convex(const Region& region);

/// Closure intersection of every member pair (i < j in member order), the
/// intersection reading of the convexity claim.
std::vector<Shape> region_pairwise_intersections(const Region& region);

struct LeaderNeighborhood {
  TriangleId anchor = 0;
  std::vector<TriangleId> neighbors;  // ascending, anchor excluded
};

/// For each triangle A (of `scope`, or of the whole mesh) every other
/// triangle B of the same scope whose closure meets A.
std::vector<LeaderNeighborhood> leader_neighborhoods(const TriMesh& mesh,
                                                     const std::optional<Region>& scope = std::nullopt);

struct ConvexityStats {
  std::size_t regions = 0;
  std::size_t convex = 0;
  double fraction() const { return regions == 0 ? 1.0 : static_cast<double>(convex) / static_cast<double>(regions); }
};

ConvexityStats region_convexity(const std::vector<Region>& regions);

}  // namespace proxtri
