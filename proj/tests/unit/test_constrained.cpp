#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "proxtri/delaunay.hpp"

using namespace proxtri;

namespace {

struct Instance {
  std::vector<Point> points;
  std::vector<Segment> segments;
};

// Random sites plus up to `max_constraints` pairwise non-crossing segments
// that pass through no other site.
Instance random_instance(std::mt19937_64& rng, std::size_t n, int max_constraints, long span) {
  std::set<Point> unique;
  while (unique.size() < n) unique.insert(random_point(rng, span));
  Instance inst{{unique.begin(), unique.end()}, {}};
  std::shuffle(inst.points.begin(), inst.points.end(), rng);
  std::vector<oracle::Seg> chosen;
  for (int attempt = 0; attempt < 50 && static_cast<int>(chosen.size()) < max_constraints; ++attempt) {
    const int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    if (i == j) continue;
    oracle::Seg s{std::min(i, j), std::max(i, j)};
    // Visible against the constraints so far means: no site inside and no crossing.
    if (!oracle::visible(inst.points, chosen, s[0], s[1])) continue;
    if (std::find(chosen.begin(), chosen.end(), s) != chosen.end()) continue;
    chosen.push_back(s);
    inst.segments.emplace_back(inst.points[s[0]], inst.points[s[1]]);
  }
  return inst;
}

void check_constrained_mesh(const TriMesh& m, const std::vector<Segment>& segments) {
  const auto& pts = m.sites().points();
  const std::size_t n = pts.size();
  const std::size_t h = oracle::hull_boundary_count(pts);
  CHECK(m.triangle_count() == 2 * n - h - 2);
  CHECK(m.edges().size() == 3 * n - h - 3);
  for (const Segment& s : segments) {
    const SiteIndex a = *m.sites().find(s.a()), b = *m.sites().find(s.b());
    const EdgeRecord* e = m.find_edge(a, b);
    REQUIRE(e != nullptr);
    CHECK(e->constrained);
  }
  std::size_t flagged = 0;
  for (const EdgeRecord& e : m.edges()) {
    flagged += e.constrained ? 1 : 0;
    CHECK(is_locally_delaunay(m, e.edge));
  }
  CHECK(flagged == segments.size());
}

}  // namespace

TEST_CASE("constrained_triangulate examples") {
  const SiteSet rect = sites({{0, 0}, {4, 0}, {4, 3}, {0, 3}});
  const TriMesh forced = constrained_triangulate(rect, ConstraintSet({Segment(P(0, 0), P(4, 3))}));
  CHECK(forced.triangle_count() == 2);
  CHECK(forced.edge(0, 2).constrained);
  CHECK_FALSE(forced.edge(0, 2).on_hull());
  const TriMesh other = constrained_triangulate(rect, ConstraintSet({Segment(P(4, 0), P(0, 3))}));
  CHECK(other.edge(1, 3).constrained);

  // Forcing the non-Delaunay diagonal of a non-cocircular quad.
  const SiteSet quad = sites({{0, 0}, {4, 0}, {5, 3}, {0, 3}});
  const TriMesh q = constrained_triangulate(quad, ConstraintSet({Segment(P(0, 0), P(5, 3))}));
  CHECK(q.has_edge(0, 2));
  CHECK_FALSE(q.has_edge(1, 3));

  const auto fan = sites({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  CHECK(constrained_triangulate(fan, ConstraintSet{}) == triangulate(fan));
}

TEST_CASE("constrained_triangulate rejects bad constraint sets") {
  const SiteSet rect = sites({{0, 0}, {4, 0}, {4, 3}, {0, 3}});
  CHECK_ERROR_CODE(constrained_triangulate(rect, ConstraintSet({Segment(P(0, 0), P(4, 3)), Segment(P(4, 0), P(0, 3))})),
                   ErrorCode::CrossingConstraints);
  CHECK_ERROR_CODE(constrained_triangulate(rect, ConstraintSet({Segment(P(0, 0), P(9, 9))})),
                   ErrorCode::UnknownConstraintEndpoint);
  const SiteSet line = sites({{0, 0}, {2, 0}, {4, 0}, {2, 1}});
  CHECK_ERROR_CODE(constrained_triangulate(line, ConstraintSet({Segment(P(0, 0), P(4, 0))})),
                   ErrorCode::ConstraintThroughSite);
  // Collinear overlapping constraints cross in their interiors.
  const SiteSet four = sites({{0, 0}, {1, 1}, {3, 0}, {5, 0}, {2, 5}});
  CHECK_ERROR_CODE(constrained_triangulate(four, ConstraintSet({Segment(P(0, 0), P(3, 0)), Segment(P(0, 0), P(5, 0))})),
                   ErrorCode::ConstraintThroughSite);
  // Sharing an endpoint is allowed; duplicates collapse.
  const TriMesh ok = constrained_triangulate(
      rect, ConstraintSet({Segment(P(0, 0), P(4, 3)), Segment(P(4, 3), P(0, 0)), Segment(P(0, 0), P(4, 0))}));
  CHECK(ok.edge(0, 2).constrained);
  CHECK(ok.edge(0, 1).constrained);
}

TEST_CASE("constrained meshes contain every constraint and are locally Delaunay") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 80; ++round) {
    const Instance inst = random_instance(rng, 6 + rng() % 25, 5, round % 2 == 0 ? 12 : 1000);
    bool all_collinear = true;
    for (std::size_t i = 2; i < inst.points.size(); ++i)
      all_collinear &= oracle::sgn(oracle::cross(inst.points[0], inst.points[1], inst.points[i])) == 0;
    if (all_collinear) continue;
    const SiteSet s(inst.points);
    const ConstraintSet l(inst.segments);
    const TriMesh m = constrained_triangulate(s, l);
    check_constrained_mesh(m, inst.segments);
    // Cross-check against the circle criterion on every mesh edge.
    for (const EdgeRecord& e : m.edges()) CHECK(is_constrained_delaunay_edge(s, l, e.edge.u, e.edge.v));
    CHECK(constrained_triangulate(s, l) == m);
  }
}

TEST_CASE("is_constrained_delaunay_edge examples") {
  const SiteSet s = sites({{0, 0}, {2, 0}, {4, 0}, {2, 1}});
  CHECK_FALSE(is_constrained_delaunay_edge(s, ConstraintSet{}, 0, 2));
  CHECK(is_constrained_delaunay_edge(s, ConstraintSet({Segment(P(0, 0), P(4, 0))}), 0, 2));
  CHECK(is_constrained_delaunay_edge(s, ConstraintSet{}, 0, 1));
  CHECK_ERROR_CODE(is_constrained_delaunay_edge(s, ConstraintSet{}, 1, 1), ErrorCode::IndexOutOfRange);

  // Sites above and below pq spoil every circle through p and q; a wall
  // between pq and the upper site hides it.
  const SiteSet w({P(0, 0), P(4, 0), P(2, 1), P(2, -1), P("-1", "0.5"), P("5", "0.5")});
  CHECK_FALSE(is_constrained_delaunay_edge(w, ConstraintSet{}, 0, 1));
  const ConstraintSet wall({Segment(P("-1", "0.5"), P("5", "0.5"))});
  CHECK(is_visible(w, wall, 0, 1));
  CHECK_FALSE(is_visible(w, wall, 0, 2));
  CHECK(is_constrained_delaunay_edge(w, wall, 0, 1));
  const TriMesh cm = constrained_triangulate(w, wall);
  CHECK(cm.has_edge(0, 1));
}

TEST_CASE("without constraints the circle criterion matches the Delaunay mesh in general position") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 30; ++round) {
    std::set<Point> unique;
    while (unique.size() < 12) unique.insert(random_point(rng, 1000, 10));
    std::vector<Point> v(unique.begin(), unique.end());
    const SiteSet s(v);
    const TriMesh m = triangulate(s);
    for (SiteIndex p = 0; p < 12; ++p)
      for (SiteIndex q = p + 1; q < 12; ++q) CHECK(is_constrained_delaunay_edge(s, ConstraintSet{}, p, q) == m.has_edge(p, q));
  }
}
