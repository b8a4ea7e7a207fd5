#include <doctest.h>

#include <memory>
#include <set>

#include "corpus.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "proxtri/proximity.hpp"
#include "proxtri/regions.hpp"

using namespace proxtri;

namespace {

std::shared_ptr<const TriMesh> mesh_of(std::initializer_list<std::pair<long, long>> xy) {
  return std::make_shared<const TriMesh>(triangulate(sites(xy)));
}

std::shared_ptr<const TriMesh> strip() {
  return mesh_of({{0, 0}, {2, 0}, {4, 0}, {1, 1}, {3, 1}, {5, 1}});
}

TriangleId id_of(const TriMesh& m, std::initializer_list<Point> corners) {
  std::set<SiteIndex> want;
  for (const Point& p : corners) want.insert(*m.sites().find(p));
  for (TriangleId t = 0; t < static_cast<TriangleId>(m.triangle_count()); ++t)
    if (std::set<SiteIndex>(m.triangle(t).begin(), m.triangle(t).end()) == want) return t;
  return -1;
}

std::vector<std::set<int>> adjacency_oracle(const TriMesh& m) {
  std::vector<std::set<int>> adj(m.triangle_count());
  for (std::size_t a = 0; a < m.triangle_count(); ++a) {
    for (std::size_t b = 0; b < m.triangle_count(); ++b) {
      if (a == b) continue;
      int shared = 0;
      for (SiteIndex x : m.triangle(a)) shared += std::count(m.triangle(b).begin(), m.triangle(b).end(), x);
      if (shared == 2) adj[a].insert(static_cast<int>(b));
    }
  }
  return adj;
}

}  // namespace

TEST_CASE("extract_regions examples") {
  const auto fan = mesh_of({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  const auto fr = extract_regions(fan);
  REQUIRE(fr.size() == 1);
  CHECK(fr[0].triangles() == std::vector<TriangleId>{0, 1, 2});

  const auto single = mesh_of({{0, 0}, {4, 0}, {0, 4}});
  const auto sr = extract_regions(single);
  REQUIRE(sr.size() == 1);
  CHECK(sr[0].size() == 1);

  const auto s = strip();
  REQUIRE(s->triangle_count() == 4);
  const auto regions = extract_regions(s);
  REQUIRE(regions.size() == 3);
  for (const Region& r : regions) CHECK(r.size() == 2);
  const auto components = extract_regions(s, RegionMode::ConnectedComponent);
  REQUIRE(components.size() == 1);
  CHECK(components[0].size() == 4);
}

TEST_CASE("proximal_region_pairs") {
  const auto s = strip();
  const auto regions = extract_regions(s);
  const auto pairs = proximal_region_pairs(regions);
  // Path regions {T1,T2}, {T2,T3}, {T3,T4} all share vertices here.
  CHECK(pairs.size() == 3);
  for (auto [i, j] : pairs) CHECK(i < j);

  const auto two = mesh_of({{0, 0}, {2, 0}, {1, 1}, {0, 2}, {2, 2}, {100, 100}, {102, 100}, {101, 101}, {100, 102}, {102, 102}});
  const auto tr = extract_regions(two);
  const auto tr_pairs = proximal_region_pairs(tr);
  bool found_far = false;
  for (std::size_t i = 0; i < tr.size(); ++i) {
    for (std::size_t j = i + 1; j < tr.size(); ++j) {
      std::set<SiteIndex> vi, vj;
      for (TriangleId t : tr[i].triangles()) vi.insert(two->triangle(t).begin(), two->triangle(t).end());
      for (TriangleId t : tr[j].triangles()) vj.insert(two->triangle(t).begin(), two->triangle(t).end());
      bool share = false;
      for (SiteIndex x : vi) share |= vj.count(x) > 0;
      const bool listed =
          std::find(tr_pairs.begin(), tr_pairs.end(), std::pair<std::size_t, std::size_t>{i, j}) != tr_pairs.end();
      CHECK(share == listed);
      found_far |= !share;
    }
  }
  CHECK(found_far);

  CHECK(proximal_region_pairs(extract_regions(mesh_of({{0, 0}, {4, 0}, {0, 4}}))).empty());
  std::vector<Region> mixed{regions[0], tr[0]};
  CHECK_ERROR_CODE(proximal_region_pairs(mixed), ErrorCode::MixedMeshes);
}

TEST_CASE("region union polygons and convexity") {
  const auto fan = mesh_of({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  const Region all(fan, {0, 1, 2});
  CHECK(region_union_polygon(all) == Polygon(pts({{0, 0}, {4, 0}, {0, 4}})));
  CHECK(is_region_convex(all));

  const TriangleId t1 = id_of(*fan, {P(0, 0), P(4, 0), P(1, 1)});
  const TriangleId t2 = id_of(*fan, {P(0, 0), P(1, 1), P(0, 4)});
  const Region sub(fan, {t1, t2});
  CHECK(region_union_polygon(sub) == Polygon(pts({{0, 0}, {4, 0}, {1, 1}, {0, 4}})));
  CHECK_FALSE(is_region_convex(sub));
  // Independent turn oracle at the reflex vertex.
  CHECK(oracle::cross(P(4, 0), P(1, 1), P(0, 4)) < 0);

  const Region one(fan, {t1});
  CHECK(region_union_polygon(one) == triangle_polygon(*fan, t1));
  CHECK(is_region_convex(one));

  // Pairwise intersections: fan pairs share a spoke.
  for (const Shape& s : region_pairwise_intersections(all)) CHECK(std::holds_alternative<Segment>(s));

  // Two triangles touching at a vertex only: pinched union.
  const auto two = mesh_of({{0, 0}, {2, 0}, {1, 1}, {0, 2}, {2, 2}});
  std::vector<TriangleId> ids;
  for (TriangleId t = 0; t < static_cast<TriangleId>(two->triangle_count()); ++t) ids.push_back(t);
  CHECK_ERROR_CODE(region_union_polygon(Region(two, {id_of(*two, {P(0, 0), P(2, 0), P(1, 1)}),
                                                     id_of(*two, {P(1, 1), P(2, 2), P(0, 2)})})),
                   ErrorCode::UnionHasHole);
}

TEST_CASE("regions on the corpus are maximal cliques, cover the mesh and add up in area") {
  for (const auto& inst : corpus::random_sets(25, 404)) {
    const auto m = std::make_shared<const TriMesh>(triangulate(SiteSet(inst.points)));
    const auto adj = adjacency_oracle(*m);
    const auto regions = extract_regions(m);
    std::set<TriangleId> covered;
    std::set<std::vector<TriangleId>> seen;
    for (const Region& r : regions) {
      std::vector<int> members(r.triangles().begin(), r.triangles().end());
      CHECK(oracle::is_maximal_clique(members, adj));
      CHECK(seen.insert(r.triangles()).second);
      covered.insert(r.triangles().begin(), r.triangles().end());
      Rational area = 0;
      for (TriangleId t : r.triangles()) area += triangle_polygon(*m, t).twice_area();
      CHECK(region_union_polygon(r).twice_area() == area);
    }
    CHECK(covered.size() == m->triangle_count());
    // Every maximal clique is reported: each adjacent pair and triangle is inside some region.
    for (std::size_t a = 0; a < adj.size(); ++a)
      for (int b : adj[a]) {
        bool in_one = false;
        for (const Region& r : regions) in_one |= r.contains(static_cast<TriangleId>(a)) && r.contains(b);
        CHECK(in_one);
      }
    const auto pairs = proximal_region_pairs(regions);
    for (auto [i, j] : pairs) CHECK(i != j);
  }
}

TEST_CASE("leader neighborhoods") {
  const auto fan = mesh_of({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  const auto ln = leader_neighborhoods(*fan);
  REQUIRE(ln.size() == 3);
  CHECK(ln[0].anchor == 0);
  CHECK(ln[0].neighbors == std::vector<TriangleId>{1, 2});

  const auto single = mesh_of({{0, 0}, {4, 0}, {0, 4}});
  const auto sl = leader_neighborhoods(*single);
  REQUIRE(sl.size() == 1);
  CHECK(sl[0].neighbors.empty());

  const auto s = strip();
  const TriangleId first = id_of(*s, {P(0, 0), P(2, 0), P(1, 1)});
  const auto sn = leader_neighborhoods(*s);
  std::vector<TriangleId> expected;
  for (TriangleId t = 0; t < 4; ++t)
    if (t != first && near(triangle_polygon(*s, first), triangle_polygon(*s, t)).is_near()) expected.push_back(t);
  CHECK(sn[static_cast<std::size_t>(first)].neighbors == expected);

  // Scoped to a region: only members appear.
  const auto regions = extract_regions(s);
  const auto scoped = leader_neighborhoods(*s, regions[0]);
  CHECK(scoped.size() == regions[0].size());
  for (const auto& n : scoped) {
    CHECK(regions[0].contains(n.anchor));
    for (TriangleId b : n.neighbors) CHECK(regions[0].contains(b));
  }
}

TEST_CASE("leader neighborhoods match geometric near and are symmetric on the corpus") {
  for (const auto& inst : corpus::random_sets(15, 808)) {
    const TriMesh m = triangulate(SiteSet(inst.points));
    const auto ln = leader_neighborhoods(m);
    const auto count = static_cast<TriangleId>(m.triangle_count());
    for (TriangleId a = 0; a < count; ++a) {
      std::vector<TriangleId> expected;
      for (TriangleId b = 0; b < count; ++b)
        if (b != a && near(triangle_polygon(m, a), triangle_polygon(m, b)).is_near()) expected.push_back(b);
      CHECK(ln[static_cast<std::size_t>(a)].neighbors == expected);
      for (TriangleId b : expected) {
        const auto& back = ln[static_cast<std::size_t>(b)].neighbors;
        CHECK(std::find(back.begin(), back.end(), a) != back.end());
      }
    }
  }
}

TEST_CASE("region convexity statistics") {
  const auto fan = mesh_of({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  const auto stats = region_convexity(extract_regions(fan));
  CHECK(stats.regions == 1);
  CHECK(stats.convex == 1);
  CHECK(stats.fraction() == 1.0);
  CHECK(region_convexity({}).fraction() == 1.0);
}
