#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "proxtri/geometry.hpp"

using namespace proxtri;

TEST_CASE("orientation examples") {
  CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) == Orientation::CCW);
  CHECK(orientation(P(0, 0), P(1, 1), P(2, 2)) == Orientation::Collinear);
  CHECK(orientation(P(0, 0), P(0, 1), P(1, 0)) == Orientation::CW);
}

TEST_CASE("orientation is antisymmetric and cyclic on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Point a = random_point(rng, 20, 3), b = random_point(rng, 20, 3), c = random_point(rng, 20, 3);
    const auto o = orientation(a, b, c);
    CHECK(static_cast<int>(o) == oracle::sgn(oracle::cross(a, b, c)));
    CHECK(orientation(b, c, a) == o);
    CHECK(static_cast<int>(orientation(b, a, c)) == -static_cast<int>(o));
  }
}

TEST_CASE("circumcircle") {
  const CircumCircle c = circumcircle(P(0, 0), P(4, 0), P(0, 4));
  CHECK(c.center == P(2, 2));
  CHECK(c.radius_sq == 8);

  const CircumCircle d = circumcircle(P(0, 0), P(2, 0), P(1, 1));
  CHECK(d.center == P(1, 0));
  CHECK(d.radius_sq == 1);
  CHECK(d.approximate_radius() == doctest::Approx(1.0));

  CHECK_ERROR_CODE(circumcircle(P(0, 0), P(1, 1), P(2, 2)), ErrorCode::CollinearInput);
}

TEST_CASE("circumcircle center is equidistant on random triples") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const Point a = random_point(rng, 50, 7), b = random_point(rng, 50, 7), c = random_point(rng, 50, 7);
    if (oracle::sgn(oracle::cross(a, b, c)) == 0) continue;
    const CircumCircle cc = circumcircle(a, b, c);
    CHECK(squared_distance(cc.center, a) == cc.radius_sq);
    CHECK(squared_distance(cc.center, b) == cc.radius_sq);
    CHECK(squared_distance(cc.center, c) == cc.radius_sq);
  }
}

TEST_CASE("in_circumcircle examples") {
  CHECK(in_circumcircle(P(0, 0), P(4, 0), P(0, 4), P(1, 1)) == CircleSide::Inside);
  CHECK(in_circumcircle(P(0, 0), P(4, 0), P(0, 4), P(4, 4)) == CircleSide::On);
  CHECK(in_circumcircle(P(0, 0), P(4, 0), P(0, 4), P(5, 5)) == CircleSide::Outside);
  CHECK_ERROR_CODE(in_circumcircle(P(0, 0), P(0, 4), P(4, 0), P(1, 1)), ErrorCode::NotCCW);
  CHECK_ERROR_CODE(in_circumcircle(P(0, 0), P(1, 1), P(2, 2), P(1, 1)), ErrorCode::NotCCW);
  // A defining vertex is on its own circle.
  CHECK(in_circumcircle(P(0, 0), P(4, 0), P(0, 4), P(4, 0)) == CircleSide::On);
}

TEST_CASE("segment and polygon construction") {
  CHECK_ERROR_CODE(Segment(P(1, 1), P(1, 1)), ErrorCode::InvalidGeometry);
  CHECK(Segment(P(2, 2), P(0, 0)) == Segment(P(0, 0), P(2, 2)));
  CHECK(Segment(P(2, 2), P(0, 0)).canonical().a() == P(0, 0));

  // Normalization: rotation, repeated and collinear vertices.
  const Polygon sq({P(2, 2), P(0, 2), P(0, 0), P(1, 0), P(2, 0), P(2, 0)});
  CHECK(sq.vertices() == pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  CHECK(sq.twice_area() == 8);

  CHECK_ERROR_CODE(Polygon(pts({{0, 0}, {0, 4}, {4, 0}})), ErrorCode::InvalidGeometry);           // clockwise
  CHECK_ERROR_CODE(Polygon(pts({{0, 0}, {1, 1}, {2, 2}})), ErrorCode::InvalidGeometry);           // flat
  CHECK_ERROR_CODE(Polygon(pts({{0, 0}, {2, 2}, {2, 0}, {0, 2}})), ErrorCode::InvalidGeometry);   // bow tie
}

TEST_CASE("segment_intersection examples") {
  const auto x = segment_intersection(Segment(P(0, 0), P(2, 2)), Segment(P(0, 2), P(2, 0)));
  REQUIRE(std::holds_alternative<Point>(x));
  CHECK(std::get<Point>(x) == P(1, 1));

  const auto o = segment_intersection(Segment(P(0, 0), P(2, 0)), Segment(P(1, 0), P(3, 0)));
  REQUIRE(std::holds_alternative<Segment>(o));
  CHECK(std::get<Segment>(o) == Segment(P(1, 0), P(2, 0)));

  CHECK(std::holds_alternative<Empty>(segment_intersection(Segment(P(0, 0), P(1, 0)), Segment(P(0, 1), P(1, 1)))));

  // Touching collinear segments meet in a point.
  const auto t = segment_intersection(Segment(P(0, 0), P(1, 0)), Segment(P(1, 0), P(3, 0)));
  REQUIRE(std::holds_alternative<Point>(t));
  CHECK(std::get<Point>(t) == P(1, 0));
}

TEST_CASE("segment_intersection is symmetric and its witnesses lie on both segments") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    // Small grid so collinear overlaps and touching endpoints occur often.
    Point a = random_point(rng, 4), b = random_point(rng, 4), c = random_point(rng, 4), d = random_point(rng, 4);
    if (a == b || c == d) continue;
    const Segment s(a, b), t(c, d);
    const auto st = segment_intersection(s, t);
    const auto ts = segment_intersection(t, s);
    CHECK(st == ts);
    if (const Point* p = std::get_if<Point>(&st)) {
      CHECK(locate_point(*p, s) != PointLocation::Exterior);
      CHECK(locate_point(*p, t) != PointLocation::Exterior);
    }
    if (const Segment* u = std::get_if<Segment>(&st)) {
      for (const Point& e : {u->a(), u->b()}) {
        CHECK(locate_point(e, s) != PointLocation::Exterior);
        CHECK(locate_point(e, t) != PointLocation::Exterior);
      }
    }
  }
}

TEST_CASE("convex_polygon_intersection examples") {
  const Polygon a(pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  const Polygon b(pts({{1, 1}, {3, 1}, {3, 3}, {1, 3}}));
  const auto ab = convex_polygon_intersection(a, b);
  REQUIRE(ab.has_value());
  CHECK(*ab == Polygon(pts({{1, 1}, {2, 1}, {2, 2}, {1, 2}})));
  CHECK(convex_polygon_intersection(a, a) == a);

  const Polygon tri(pts({{0, 0}, {4, 0}, {0, 4}}));
  const Polygon far_sq(pts({{3, 3}, {5, 3}, {5, 5}, {3, 5}}));
  CHECK_FALSE(convex_polygon_intersection(tri, far_sq).has_value());

  // Sharing only an edge: no area.
  const Polygon right(pts({{2, 0}, {4, 0}, {4, 2}, {2, 2}}));
  CHECK_FALSE(convex_polygon_intersection(a, right).has_value());

  const Polygon reflex(pts({{0, 0}, {4, 0}, {1, 1}, {0, 4}}));
  CHECK_ERROR_CODE(convex_polygon_intersection(reflex, a), ErrorCode::NonConvexInput);
}

TEST_CASE("is_convex_polygon examples") {
  CHECK(is_convex_polygon(Polygon(pts({{0, 0}, {4, 0}, {0, 4}}))));
  CHECK_FALSE(is_convex_polygon(Polygon(pts({{0, 0}, {4, 0}, {1, 1}, {0, 4}}))));
  CHECK(is_convex_polygon(Polygon(pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}}))));
}

TEST_CASE("locate_point examples") {
  const Segment s(P(0, 0), P(2, 2));
  CHECK(locate_point(P(1, 1), s) == PointLocation::Interior);
  CHECK(locate_point(P(0, 0), s) == PointLocation::Boundary);
  CHECK(locate_point(P(3, 3), s) == PointLocation::Exterior);
  CHECK(locate_point(P(1, 0), s) == PointLocation::Exterior);

  const Polygon tri(pts({{0, 0}, {4, 0}, {0, 4}}));
  CHECK(locate_point(P(3, 3), tri) == PointLocation::Exterior);
  CHECK(locate_point(P(1, 1), tri) == PointLocation::Interior);
  CHECK(locate_point(P(2, 2), tri) == PointLocation::Boundary);
  CHECK(locate_point(P(0, 4), tri) == PointLocation::Boundary);

  // Non-convex polygon: the notch is outside.
  const Polygon notch(pts({{0, 0}, {4, 0}, {4, 4}, {2, 1}, {0, 4}}));
  CHECK(locate_point(P(2, 3), notch) == PointLocation::Exterior);
  CHECK(locate_point(P(1, 1), notch) == PointLocation::Interior);
  CHECK(locate_point(P("3", "2.5"), notch) == PointLocation::Boundary);
}

TEST_CASE("interior points of a segment are collinear non-endpoints") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 500; ++i) {
    const Point a = random_point(rng, 5), b = random_point(rng, 5), x = random_point(rng, 5);
    if (a == b) continue;
    const Segment s(a, b);
    if (locate_point(x, s) == PointLocation::Interior) {
      CHECK(x != a);
      CHECK(x != b);
      CHECK(orientation(a, b, x) == Orientation::Collinear);
    }
  }
}

TEST_CASE("intersect_closures classifies by dimension") {
  const Polygon a(pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  const Polygon right(pts({{2, 0}, {4, 0}, {4, 2}, {2, 2}}));
  const Polygon corner(pts({{2, 2}, {4, 2}, {4, 4}, {2, 4}}));
  const Polygon far_away(pts({{5, 5}, {6, 5}, {6, 6}}));

  const Shape edge = intersect_closures(a, right);
  REQUIRE(std::holds_alternative<Segment>(edge));
  CHECK(std::get<Segment>(edge) == Segment(P(2, 0), P(2, 2)));

  const Shape point = intersect_closures(a, corner);
  REQUIRE(std::holds_alternative<Point>(point));
  CHECK(std::get<Point>(point) == P(2, 2));

  CHECK(is_empty(intersect_closures(a, far_away)));

  const Shape seg_in_poly = intersect_closures(Segment(P(-1, 1), P(3, 1)), a);
  REQUIRE(std::holds_alternative<Segment>(seg_in_poly));
  CHECK(std::get<Segment>(seg_in_poly) == Segment(P(0, 1), P(2, 1)));

  const Shape point_in_poly = intersect_closures(P(1, 1), a);
  REQUIRE(std::holds_alternative<Point>(point_in_poly));
}

TEST_CASE("convex_hull") {
  const auto sq = pts({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}, {1, 0}});
  const Shape h = convex_hull(sq);
  REQUIRE(std::holds_alternative<Polygon>(h));
  CHECK(std::get<Polygon>(h) == Polygon(pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}})));

  const auto line = pts({{2, 2}, {0, 0}, {1, 1}});
  const Shape l = convex_hull(line);
  REQUIRE(std::holds_alternative<Segment>(l));
  CHECK(std::get<Segment>(l) == Segment(P(0, 0), P(2, 2)));

  const auto single = pts({{3, 3}, {3, 3}});
  CHECK(std::holds_alternative<Point>(convex_hull(single)));
  CHECK(is_empty(convex_hull(std::vector<Point>{})));
}

TEST_CASE("exact decimal parsing and printing") {
  CHECK(*try_parse_decimal("3.25") == Rational(13, 4));
  CHECK(*try_parse_decimal("-.5") == Rational(-1, 2));
  CHECK(*try_parse_decimal("1.5e-3") == Rational(3, 2000));
  CHECK(*try_parse_decimal("+7") == 7);
  CHECK(*try_parse_decimal("0.1") == Rational(1, 10));
  CHECK_FALSE(try_parse_decimal("").has_value());
  CHECK_FALSE(try_parse_decimal("1.2.3").has_value());
  CHECK_FALSE(try_parse_decimal("nan").has_value());
  CHECK_FALSE(try_parse_decimal("inf").has_value());
  CHECK_FALSE(try_parse_decimal("1/3").has_value());
  CHECK(*try_parse_rational("1/3") == Rational(1, 3));
  CHECK_FALSE(try_parse_rational("1/0").has_value());

  CHECK(to_exact_string(Rational(13, 4)) == "3.25");
  CHECK(to_exact_string(Rational(-1, 2)) == "-0.5");
  CHECK(to_exact_string(Rational(1, 3)) == "1/3");
  CHECK(to_exact_string(Rational(-7)) == "-7");
  CHECK(to_exact_string(Rational(3, 2000)) == "0.0015");
  for (const char* text : {"0", "12.5", "-0.125", "1000000.000001", "22/7", "-5/6"}) {
    CHECK(*try_parse_rational(to_exact_string(*try_parse_rational(text))) == *try_parse_rational(text));
  }
}
