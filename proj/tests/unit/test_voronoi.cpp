#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "proxtri/voronoi.hpp"

using namespace proxtri;

namespace {

std::array<Rational, 4> frame_array(const Frame& f) { return {f.x0, f.y0, f.x1, f.y1}; }

void check_against_oracle(const VoronoiDiagram& vd) {
  const auto& pts = vd.sites().points();
  Rational total = 0;
  for (const VoronoiCell& cell : vd.cells()) {
    const auto expected = oracle::voronoi_cell(pts, cell.site, frame_array(vd.frame()));
    CHECK(cell.polygon == Polygon(expected));
    CHECK(is_convex_polygon(cell.polygon));
    CHECK(locate_point(pts[cell.site], cell.polygon) == PointLocation::Interior);
    total += cell.polygon.twice_area();
    // Each non-frame edge lies on the bisector with its neighbor.
    for (const CellEdge& e : cell.edges) {
      if (e.on_frame()) {
        CHECK((vd.frame().on_border(e.segment.a()) && vd.frame().on_border(e.segment.b())));
        continue;
      }
      for (const Point& x : {e.segment.a(), e.segment.b()}) {
        CHECK(squared_distance(x, pts[cell.site]) == squared_distance(x, pts[*e.neighbor]));
      }
    }
  }
  const Frame& f = vd.frame();
  CHECK(total == 2 * (f.x1 - f.x0) * (f.y1 - f.y0));
}

}  // namespace

TEST_CASE("voronoi_diagram examples") {
  const VoronoiDiagram vd = voronoi_diagram(sites({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}));
  CHECK(vd.cell(4).polygon == Polygon(pts({{1, 0}, {2, 1}, {1, 2}, {0, 1}})));
  CHECK_FALSE(vd.cell(4).unbounded);
  CHECK(vd.cell(0).unbounded);
  check_against_oracle(vd);

  const VoronoiDiagram tri = voronoi_diagram(sites({{0, 0}, {4, 0}, {0, 4}}));
  CHECK(tri.vertices() == std::vector<Point>{P(2, 2)});
  for (const VoronoiCell& c : tri.cells()) CHECK(c.unbounded);
  check_against_oracle(tri);

  const Frame small{Rational(-1), Rational(-1), Rational(1), Rational(5)};
  CHECK_ERROR_CODE(voronoi_diagram(sites({{0, 0}, {4, 0}, {0, 4}}), small), ErrorCode::FrameTooSmall);
  // Touching the frame is not strictly inside.
  const Frame touching{Rational(-1), Rational(-1), Rational(4), Rational(5)};
  CHECK_ERROR_CODE(voronoi_diagram(sites({{0, 0}, {4, 0}, {0, 4}}), touching), ErrorCode::FrameTooSmall);
  const Frame custom{Rational(-10), Rational(-10), Rational(10), Rational(10)};
  const VoronoiDiagram c = voronoi_diagram(sites({{0, 0}, {4, 0}, {0, 4}}), custom);
  CHECK(c.frame().x1 == 10);
  check_against_oracle(c);
  CHECK_ERROR_CODE(vd.cell(5), ErrorCode::IndexOutOfRange);
}

TEST_CASE("default frame strictly contains sites and circumcenters with margin") {
  const TriMesh m = triangulate(sites({{0, 0}, {4, 0}, {2, 1}}));
  const Frame f = default_frame(m);
  CHECK(f.strictly_contains(P(0, 0)));
  CHECK(f.strictly_contains(circumcircle(P(0, 0), P(4, 0), P(2, 1)).center));
  const Rational w = f.x1 - f.x0, h = f.y1 - f.y0;
  CHECK(w > 4);
  CHECK(h > 1);
}

TEST_CASE("cells equal the half-plane intersection against all sites") {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 40; ++round) {
    std::set<Point> unique;
    const long span = round % 2 == 0 ? 6 : 1000;
    while (unique.size() < 4 + rng() % 25) unique.insert(random_point(rng, span));
    std::vector<Point> v(unique.begin(), unique.end());
    bool all_collinear = true;
    for (std::size_t i = 2; i < v.size(); ++i) all_collinear &= oracle::sgn(oracle::cross(v[0], v[1], v[i])) == 0;
    if (all_collinear) continue;
    check_against_oracle(voronoi_diagram(SiteSet(v)));
  }
  for (std::uint64_t seed = 1; seed < 10; ++seed) {
    check_against_oracle(voronoi_diagram(SiteSet(io::generate_sites(12, seed, io::Distribution::Cocircular))));
    check_against_oracle(voronoi_diagram(SiteSet(io::generate_sites(12, seed, io::Distribution::CollinearHeavy))));
  }
}

TEST_CASE("Voronoi vertices are circumcenters of mesh triangles") {
  const auto v = io::generate_sites(30, 3, io::Distribution::Uniform);
  const TriMesh m = triangulate(SiteSet(v));
  const VoronoiDiagram vd = voronoi_diagram(m);
  std::set<Point> centers;
  for (const Triangle& t : m.triangles()) centers.insert(circumcircle(v[t[0]], v[t[1]], v[t[2]]).center);
  CHECK(std::vector<Point>(centers.begin(), centers.end()) == vd.vertices());
  // Every polygon vertex off the frame is one of them.
  for (const VoronoiCell& c : vd.cells())
    for (const Point& x : c.polygon.vertices())
      if (!vd.frame().on_border(x)) CHECK(centers.count(x) == 1);
}

TEST_CASE("common_vertex examples") {
  const VoronoiDiagram tri = voronoi_diagram(sites({{0, 0}, {4, 0}, {0, 4}}));
  CHECK(common_vertex(tri, 0, 1, 2) == P(2, 2));
  CHECK(common_vertex(tri, 2, 0, 1) == P(2, 2));

  const VoronoiDiagram fan = voronoi_diagram(sites({{0, 0}, {4, 0}, {0, 4}, {1, 1}}));
  CHECK_FALSE(common_vertex(fan, 0, 1, 2).has_value());
  CHECK(common_vertex(fan, 0, 1, 3) == circumcircle(P(0, 0), P(4, 0), P(1, 1)).center);

  const VoronoiDiagram sq = voronoi_diagram(sites({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  CHECK_ERROR_CODE(common_vertex(sq, 0, 1, 2), ErrorCode::DegenerateIntersection);
  CHECK_ERROR_CODE(common_vertex(sq, 1, 2, 3), ErrorCode::DegenerateIntersection);
  CHECK_ERROR_CODE(common_vertex(sq, 0, 0, 1), ErrorCode::IndexOutOfRange);
  CHECK_ERROR_CODE(common_vertex(sq, 0, 1, 9), ErrorCode::IndexOutOfRange);
}

TEST_CASE("cells_strongly_near examples") {
  // p, q with a common Voronoi edge x-y on x = 2, r and t above and below.
  const VoronoiDiagram fig = voronoi_diagram(sites({{0, 0}, {4, 0}, {2, 3}, {2, -3}}));
  CHECK(cells_strongly_near(fig, 0, 1));
  const Shape xy = cell_intersection(fig, 0, 1);
  REQUIRE(std::holds_alternative<Segment>(xy));
  CHECK(std::get<Segment>(xy) == Segment(P("2", "-5/6"), P("2", "5/6")));
  CHECK_FALSE(cells_strongly_near(fig, 2, 3));

  const VoronoiDiagram line = voronoi_diagram(sites({{0, 0}, {2, 0}, {4, 0}, {2, 1}}));
  CHECK_FALSE(cells_strongly_near(line, 0, 2));
  CHECK_ERROR_CODE(cells_strongly_near(line, 1, 1), ErrorCode::IndexOutOfRange);

  // Cocircular square: opposite cells touch in a point only.
  const VoronoiDiagram sq = voronoi_diagram(sites({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  CHECK_FALSE(cells_strongly_near(sq, 0, 2));
  CHECK(cells_strongly_near(sq, 0, 1));
  CHECK(std::holds_alternative<Point>(cell_intersection(sq, 0, 2)));
}

TEST_CASE("collinear sites have parallel strip cells") {
  // Three collinear sites plus one off the line, far away.
  const VoronoiDiagram vd = voronoi_diagram(sites({{0, 0}, {1, 0}, {2, 0}, {1, 50}}));
  CHECK_FALSE(cells_strongly_near(vd, 0, 2));
  CHECK(cells_strongly_near(vd, 0, 1));
  CHECK(cells_strongly_near(vd, 1, 2));
  check_against_oracle(vd);
}

TEST_CASE("voronoi duality on the corpus") {
  for (const auto& inst : corpus::random_sets(12, 99)) {
    const TriMesh m = triangulate(SiteSet(inst.points));
    const VoronoiDiagram vd = voronoi_diagram(m);
    check_against_oracle(vd);
    if (!corpus::general_position(inst.points)) continue;
    const auto n = static_cast<SiteIndex>(inst.points.size());
    for (SiteIndex p = 0; p < n; ++p)
      for (SiteIndex q = p + 1; q < n; ++q) CHECK(cells_strongly_near(vd, p, q) == m.has_edge(p, q));
  }
}
