#include <algorithm>
#include <sstream>

#include "proxtri/delaunay.hpp"
#include "proxtri/error.hpp"

namespace proxtri {
namespace {

// Both endpoints of t lie strictly on the same side of s's line.
bool strictly_one_side(const Segment& s, const Segment& t) {
  const Orientation oa = orientation(s.a(), s.b(), t.a());
  return oa != Orientation::Collinear && oa == orientation(s.a(), s.b(), t.b());
}

void validate_constraints(const SiteSet& sites, const std::vector<Edge>& edges) {
  for (const Edge& e : edges) {
    const Segment seg(sites[e.u], sites[e.v]);
    for (SiteIndex s = 0; s < static_cast<SiteIndex>(sites.size()); ++s) {
      if (s == e.u || s == e.v) continue;
      if (orientation(seg.a(), seg.b(), sites[s]) != Orientation::Collinear) continue;
      if (locate_point(sites[s], seg) == PointLocation::Interior) {
        std::ostringstream msg;
        msg << "constraint " << sites[e.u] << "-" << sites[e.v] << " passes through site " << sites[s];
        throw Error(ErrorCode::ConstraintThroughSite, msg.str());
      }
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Segment si(sites[edges[i].u], sites[edges[i].v]);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Segment sj(sites[edges[j].u], sites[edges[j].v]);
      if (strictly_one_side(si, sj) || strictly_one_side(sj, si)) continue;
      auto hit = segment_intersection(si, sj);
      bool crossing = std::holds_alternative<Segment>(hit);
      if (const auto* x = std::get_if<Point>(&hit)) {
        const bool shared_endpoint = (*x == si.a() || *x == si.b()) && (*x == sj.a() || *x == sj.b());
        crossing = !shared_endpoint;
      }
      if (crossing) {
        std::ostringstream msg;
        msg << "constraints " << si.a() << "-" << si.b() << " and " << sj.a() << "-" << sj.b() << " cross";
        throw Error(ErrorCode::CrossingConstraints, msg.str());
      }
    }
  }
}

// Delaunay triangulation of the pseudo-polygon (base_from, base_to, chain...)
// in counterclockwise order, where chain runs from base_to back to
// base_from. Picks the chain vertex whose circle through the base edge
// encloses no other chain vertex, then recurses on both sides.
void fill_pseudo_polygon(const SiteSet& sites, SiteIndex base_from, SiteIndex base_to,
                         const std::vector<SiteIndex>& chain, std::vector<Triangle>& out) {
  if (chain.empty()) return;
  std::size_t pick = 0;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (incircle_sign(sites[base_from], sites[base_to], sites[chain[pick]], sites[chain[i]]) > 0) pick = i;
  }
  out.push_back({base_from, base_to, chain[pick]});
  std::vector<SiteIndex> before(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(pick));
  std::vector<SiteIndex> after(chain.begin() + static_cast<std::ptrdiff_t>(pick) + 1, chain.end());
  fill_pseudo_polygon(sites, chain[pick], base_to, before, out);
  fill_pseudo_polygon(sites, base_from, chain[pick], after, out);
}

// Removes the triangles crossed by the open segment ab and refills the two
// cavities on either side.
std::vector<Triangle> insert_segment(const TriMesh& mesh, SiteIndex a, SiteIndex b) {
  const SiteSet& sites = mesh.sites();
  const Point& pa = sites[a];
  const Point& pb = sites[b];

  TriangleId current = -1;
  SiteIndex right = -1;
  SiteIndex left = -1;
  for (TriangleId t : mesh.incident_triangles(a)) {
    const Triangle& tri = mesh.triangles()[static_cast<std::size_t>(t)];
    int k = 0;
    while (tri[static_cast<std::size_t>(k)] != a) ++k;
    const SiteIndex v1 = tri[static_cast<std::size_t>((k + 1) % 3)];
    const SiteIndex v2 = tri[static_cast<std::size_t>((k + 2) % 3)];
    if (orientation(pa, sites[v1], pb) == Orientation::CCW && orientation(pa, pb, sites[v2]) == Orientation::CCW) {
      current = t;
      right = v1;
      left = v2;
      break;
    }
  }
  if (current < 0) throw Error(ErrorCode::InvalidMesh, "constraint leaves the triangulated domain");

  std::vector<TriangleId> removed{current};
  std::vector<SiteIndex> right_chain{right};
  std::vector<SiteIndex> left_chain{left};
  for (;;) {
    // Step across edge (right, left).
    const EdgeRecord& rec = mesh.edge(right, left);
    const TriangleId next = rec.triangles[0] == current ? rec.triangles[1] : rec.triangles[0];
    if (next < 0) throw Error(ErrorCode::InvalidMesh, "constraint leaves the triangulated domain");
    current = next;
    removed.push_back(current);
    SiteIndex apex = -1;
    for (SiteIndex v : mesh.triangles()[static_cast<std::size_t>(current)]) {
      if (v != right && v != left) apex = v;
    }
    if (apex == b) break;
    switch (orientation(pa, pb, sites[apex])) {
      case Orientation::CW:
        right = apex;
        right_chain.push_back(apex);
        break;
      case Orientation::CCW:
        left = apex;
        left_chain.push_back(apex);
        break;
      case Orientation::Collinear:
        throw Error(ErrorCode::ConstraintThroughSite, "constraint passes through a site");
    }
  }

  std::sort(removed.begin(), removed.end());
  std::vector<Triangle> kept;
  kept.reserve(mesh.triangle_count());
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    if (!std::binary_search(removed.begin(), removed.end(), static_cast<TriangleId>(t))) {
      kept.push_back(mesh.triangles()[t]);
    }
  }
  // Right side, counterclockwise: b, a, right_chain...
  fill_pseudo_polygon(sites, b, a, right_chain, kept);
  // Left side, counterclockwise: a, b, left_chain reversed.
  std::reverse(left_chain.begin(), left_chain.end());
  fill_pseudo_polygon(sites, a, b, left_chain, kept);
  return kept;
}

}  // namespace

TriMesh constrained_triangulate(const SiteSet& sites, const ConstraintSet& constraints) {
  const std::vector<Edge> edges = constraints.resolve(sites);
  validate_constraints(sites, edges);
  TriMesh mesh = triangulate(sites);
  // Constraints do not cross, so a later insertion never removes an earlier one.
  for (const Edge& e : edges) {
    if (!mesh.has_edge(e.u, e.v)) mesh = TriMesh::from_triangles(sites, insert_segment(mesh, e.u, e.v));
  }
  return TriMesh::from_triangles(sites, mesh.triangles(), edges);
}

}  // namespace proxtri
