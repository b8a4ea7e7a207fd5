#include "proxtri/regions.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "proxtri/error.hpp"
#include "proxtri/proximity.hpp"

namespace proxtri {

Region::Region(std::shared_ptr<const TriMesh> mesh, std::vector<TriangleId> triangles)
    : mesh_(std::move(mesh)), triangles_(std::move(triangles)) {
  std::sort(triangles_.begin(), triangles_.end());
  triangles_.erase(std::unique(triangles_.begin(), triangles_.end()), triangles_.end());
  if (triangles_.empty()) throw Error(ErrorCode::InvalidGeometry, "a region needs at least one triangle");
  for (TriangleId t : triangles_) {
    if (!mesh_->contains_triangle(t)) throw Error(ErrorCode::IndexOutOfRange, "triangle id " + std::to_string(t));
  }
}

bool Region::contains(TriangleId t) const { return std::binary_search(triangles_.begin(), triangles_.end(), t); }

namespace {

bool adjacent(const TriMesh& mesh, TriangleId a, TriangleId b) {
  const auto& n = mesh.neighbors(a);
  return std::find(n.begin(), n.end(), b) != n.end();
}

std::vector<std::vector<TriangleId>> maximal_cliques(const TriMesh& mesh) {
  // The strong-proximity graph has degree at most 3 and, being the dual of a
  // planar triangulation with boundary, no K4; so cliques are singletons,
  // adjacent pairs, or triangles of mutual neighbors.
  std::vector<std::vector<TriangleId>> out;
  const auto count = static_cast<TriangleId>(mesh.triangle_count());
  for (TriangleId t = 0; t < count; ++t) {
    const auto nbrs = adjacency(mesh, t);
    if (nbrs.empty()) {
      out.push_back({t});
      continue;
    }
    std::vector<bool> covered(nbrs.size(), false);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (adjacent(mesh, nbrs[i], nbrs[j])) {
          covered[i] = covered[j] = true;
          std::vector<TriangleId> clique{t, nbrs[i], nbrs[j]};
          std::sort(clique.begin(), clique.end());
          if (clique.front() == t) out.push_back(std::move(clique));
        }
      }
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!covered[i] && t < nbrs[i]) out.push_back({t, nbrs[i]});
    }
  }
  return out;
}

std::vector<std::vector<TriangleId>> components(const TriMesh& mesh) {
  const std::size_t count = mesh.triangle_count();
  std::vector<int> label(count, -1);
  std::vector<std::vector<TriangleId>> out;
  for (std::size_t start = 0; start < count; ++start) {
    if (label[start] >= 0) continue;
    std::vector<TriangleId> members{static_cast<TriangleId>(start)};
    label[start] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (TriangleId n : mesh.neighbors(members[i])) {
        if (n >= 0 && label[static_cast<std::size_t>(n)] < 0) {
          label[static_cast<std::size_t>(n)] = static_cast<int>(out.size());
          members.push_back(n);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<SiteIndex> region_vertices(const Region& r) {
  std::vector<SiteIndex> out;
  for (TriangleId t : r.triangles()) {
    for (SiteIndex v : r.mesh().triangles()[static_cast<std::size_t>(t)]) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Region> extract_regions(std::shared_ptr<const TriMesh> mesh, RegionMode mode) {
  auto groups = mode == RegionMode::Clique ? maximal_cliques(*mesh) : components(*mesh);
  std::sort(groups.begin(), groups.end());
  std::vector<Region> regions;
  regions.reserve(groups.size());
  for (auto& g : groups) regions.emplace_back(mesh, std::move(g));
  return regions;
}

std::vector<std::pair<std::size_t, std::size_t>> proximal_region_pairs(const std::vector<Region>& regions) {
  for (const Region& r : regions) {
    if (r.mesh_ptr() != regions.front().mesh_ptr()) {
      throw Error(ErrorCode::MixedMeshes, "regions come from different meshes");
    }
  }
  std::vector<std::vector<SiteIndex>> vertices;
  vertices.reserve(regions.size());
  for (const Region& r : regions) vertices.push_back(region_vertices(r));

  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    for (std::size_t j = i + 1; j < regions.size(); ++j) {
      std::vector<SiteIndex> common;
      std::set_intersection(vertices[i].begin(), vertices[i].end(), vertices[j].begin(), vertices[j].end(),
                            std::back_inserter(common));
      if (!common.empty()) out.emplace_back(i, j);
    }
  }
  return out;
}

Polygon region_union_polygon(const Region& region) {
  const TriMesh& mesh = region.mesh();
  // Directed boundary edges: those whose twin is not in the region.
  std::map<SiteIndex, std::vector<SiteIndex>> next;
  std::size_t edge_count = 0;
  for (TriangleId t : region.triangles()) {
    const Triangle& tri = mesh.triangles()[static_cast<std::size_t>(t)];
    const auto& nbrs = mesh.neighbors(t);
    for (int k = 0; k < 3; ++k) {
      const TriangleId across = nbrs[static_cast<std::size_t>(k)];
      if (across >= 0 && region.contains(across)) continue;
      next[tri[static_cast<std::size_t>((k + 1) % 3)]].push_back(tri[static_cast<std::size_t>((k + 2) % 3)]);
      ++edge_count;
    }
  }
  for (const auto& [from, targets] : next) {
    if (targets.size() != 1) throw Error(ErrorCode::UnionHasHole, "region boundary pinches at a vertex");
  }
  const SiteIndex start = next.begin()->first;
  std::vector<Point> loop;
  SiteIndex at = start;
  do {
    loop.push_back(mesh.point(at));
    at = next.at(at).front();
  } while (at != start && loop.size() <= edge_count);
  if (loop.size() != edge_count) {
    throw Error(ErrorCode::UnionHasHole, "region boundary has more than one loop");
  }
  return Polygon(std::move(loop));
}

bool is_region_convex(const Region& region) { return is_convex_polygon(region_union_polygon(region)); }

std::vector<Shape> region_pairwise_intersections(const Region& region) {
  std::vector<Shape> out;
  const auto& members = region.triangles();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      out.push_back(intersect_closures(triangle_polygon(region.mesh(), members[i]),
                                       triangle_polygon(region.mesh(), members[j])));
    }
  }
  return out;
}

std::vector<LeaderNeighborhood> leader_neighborhoods(const TriMesh& mesh, const std::optional<Region>& scope) {
  std::vector<TriangleId> members;
  if (scope) {
    members = scope->triangles();
  } else {
    members.resize(mesh.triangle_count());
    for (std::size_t t = 0; t < members.size(); ++t) members[t] = static_cast<TriangleId>(t);
  }
  std::vector<LeaderNeighborhood> out;
  out.reserve(members.size());
  for (TriangleId a : members) {
    LeaderNeighborhood hood{a, {}};
    // Triangles sharing any vertex with a.
    for (SiteIndex v : mesh.triangle(a)) {
      for (TriangleId b : mesh.incident_triangles(v)) {
        if (b != a && (!scope || scope->contains(b))) hood.neighbors.push_back(b);
      }
    }
    std::sort(hood.neighbors.begin(), hood.neighbors.end());
    hood.neighbors.erase(std::unique(hood.neighbors.begin(), hood.neighbors.end()), hood.neighbors.end());
    out.push_back(std::move(hood));
  }
  return out;
}

ConvexityStats region_convexity(const std::vector<Region>& regions) {
  ConvexityStats stats;
  for (const Region& r : regions) {
    ++stats.regions;
    if (is_region_convex(r)) ++stats.convex;
  }
  return stats;
}

}  // namespace proxtri
