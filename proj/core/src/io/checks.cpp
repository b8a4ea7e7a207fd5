#include "proxtri/io/checks.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include "proxtri/error.hpp"
#include "proxtri/proximity.hpp"
#include "proxtri/regions.hpp"

namespace proxtri::io {
namespace {

// Accumulates the cases of one property.
class Property {
 public:
  Property(std::string_view suite, std::string_view name) {
    report_.suite = suite;
    report_.name = name;
  }

  void pass() { ++report_.cases; }
  void skip() {
    ++report_.cases;
    ++report_.skipped;
  }
  void fail(const std::string& counterexample) {
    ++report_.cases;
    if (report_.failures++ == 0) report_.counterexample = counterexample;
  }
  void check(bool ok, const std::function<std::string()>& counterexample) {
    if (ok) {
      pass();
    } else {
      fail(counterexample());
    }
  }
  void note(std::string text) { report_.note = std::move(text); }

  PropertyReport finish() {
    if (report_.failures > 0) {
      report_.status = CheckStatus::Fail;
    } else if (report_.skipped > 0) {
      report_.status = CheckStatus::DegenerateSkip;
    } else {
      report_.status = CheckStatus::Pass;
    }
    return std::move(report_);
  }

 private:
  PropertyReport report_;
};

std::string describe_triangle(const TriMesh& m, TriangleId t) {
  std::ostringstream os;
  const Triangle& tri = m.triangle(t);
  os << "triangle " << t << " [" << tri[0] << " " << tri[1] << " " << tri[2] << "] " << m.point(tri[0]) << " "
     << m.point(tri[1]) << " " << m.point(tri[2]);
  return os.str();
}

std::string describe_sites(const TriMesh& m, std::initializer_list<SiteIndex> ids) {
  std::ostringstream os;
  os << "sites";
  for (SiteIndex i : ids) os << " " << i << " " << m.point(i);
  return os.str();
}

Point circumcenter(const TriMesh& m, TriangleId t) {
  const Triangle& tri = m.triangle(t);
  return circumcircle(m.point(tri[0]), m.point(tri[1]), m.point(tri[2])).center;
}

// Interior edge whose two triangles share a circumcircle: either diagonal
// would be Delaunay and the Voronoi cells meet in a single point.
bool cocircular_edge(const TriMesh& m, const EdgeRecord& e) {
  if (e.on_hull()) return false;
  const Triangle& t = m.triangle(e.triangles[0]);
  const Triangle& u = m.triangle(e.triangles[1]);
  SiteIndex opposite = -1;
  for (SiteIndex x : u) {
    if (x != e.edge.u && x != e.edge.v) opposite = x;
  }
  return incircle_sign(m.point(t[0]), m.point(t[1]), m.point(t[2]), m.point(opposite)) == 0;
}

std::vector<PropertyReport> delaunay_suite(const TriMesh& m) {
  std::vector<PropertyReport> out;
  const auto n = static_cast<SiteIndex>(m.sites().size());
  const auto count = static_cast<TriangleId>(m.triangle_count());

  Property empty("delaunay", "empty-circumdisk");
  for (TriangleId t = 0; t < count; ++t) {
    const Triangle& tri = m.triangle(t);
    std::optional<SiteIndex> witness;
    for (SiteIndex d = 0; d < n && !witness; ++d) {
      if (d == tri[0] || d == tri[1] || d == tri[2]) continue;
      if (in_circumcircle(m.point(tri[0]), m.point(tri[1]), m.point(tri[2]), m.point(d)) == CircleSide::Inside) {
        witness = d;
      }
    }
    empty.check(!witness, [&] { return describe_triangle(m, t) + ": " + describe_sites(m, {*witness}) + " inside"; });
  }
  out.push_back(empty.finish());

  Property euler("delaunay", "euler-counts");
  const Shape hull = convex_hull(m.sites().points());
  std::size_t h = 0;
  for (const Point& p : m.sites().points()) h += locate_point(p, hull) == PointLocation::Boundary ? 1 : 0;
  const std::size_t sites = m.sites().size();
  euler.check(m.triangle_count() == 2 * sites - h - 2 && m.edges().size() == 3 * sites - h - 3, [&] {
    std::ostringstream os;
    os << "n=" << sites << " h=" << h << ": " << m.triangle_count() << " triangles, " << m.edges().size()
       << " edges";
    return os.str();
  });
  out.push_back(euler.finish());

  Property cover("delaunay", "covers-hull");
  Rational area = 0;
  for (TriangleId t = 0; t < count; ++t) area += triangle_polygon(m, t).twice_area();
  const Polygon* hull_polygon = std::get_if<Polygon>(&hull);
  cover.check(hull_polygon && hull_polygon->twice_area() == area,
              [&] { return "triangle area " + to_exact_string(area / 2) + " differs from hull area"; });
  out.push_back(cover.finish());

  Property local("delaunay", "locally-delaunay");
  for (const EdgeRecord& e : m.edges()) {
    local.check(is_locally_delaunay(m, e.edge), [&] { return "edge " + describe_sites(m, {e.edge.u, e.edge.v}); });
  }
  out.push_back(local.finish());
  return out;
}

std::vector<PropertyReport> dual_suite(const TriMesh& m, const VoronoiDiagram& vd) {
  std::vector<PropertyReport> out;
  const auto n = static_cast<SiteIndex>(m.sites().size());

  Property duality("dual", "edge-duality");
  std::size_t degenerate = 0;
  for (SiteIndex p = 0; p < n; ++p) {
    for (SiteIndex q = p + 1; q < n; ++q) {
      const bool strong = is_delaunay_edge(m, vd, p, q);
      const EdgeRecord* e = m.find_edge(p, q);
      if (strong == (e != nullptr)) {
        duality.pass();
      } else if (e && cocircular_edge(m, *e) && !is_empty(cell_intersection(vd, p, q))) {
        // Tie broken by perturbation: the cells touch at the shared vertex.
        ++degenerate;
        duality.pass();
      } else {
        duality.fail(describe_sites(m, {p, q}) + (e ? ": mesh edge without a common Voronoi segment"
                                                    : ": common Voronoi segment but no mesh edge"));
      }
    }
  }
  if (degenerate > 0) {
    duality.note(std::to_string(degenerate) + " cocircular mesh edge(s) whose cells meet in a point");
  }
  out.push_back(duality.finish());

  Property vertices("dual", "vertices-are-circumcenters");
  std::set<Point> centers;
  for (TriangleId t = 0; t < static_cast<TriangleId>(m.triangle_count()); ++t) centers.insert(circumcenter(m, t));
  vertices.check(std::vector<Point>(centers.begin(), centers.end()) == vd.vertices(),
                 [] { return std::string("Voronoi vertex list differs from the set of circumcenters"); });
  out.push_back(vertices.finish());
  return out;
}

std::vector<PropertyReport> lemma2_suite(const TriMesh& m, const VoronoiDiagram& vd) {
  Property common("lemma2", "circumcenter-is-common-vertex");
  std::size_t ok = 0;
  for (TriangleId t = 0; t < static_cast<TriangleId>(m.triangle_count()); ++t) {
    const Triangle& tri = m.triangle(t);
    const Point center = circumcenter(m, t);
    try {
      const auto v = common_vertex(vd, tri[0], tri[1], tri[2]);
      if (v && *v == center) {
        ++ok;
        common.pass();
      } else {
        std::ostringstream os;
        os << describe_triangle(m, t) << ": circumcenter " << center << ", common vertex ";
        if (v) {
          os << *v;
        } else {
          os << "absent";
        }
        common.fail(os.str());
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateIntersection) throw;
      common.skip();
    }
  }
  std::ostringstream note;
  note << ok << "/" << m.triangle_count() << " triangles: circumcenter = common Voronoi vertex";
  common.note(note.str());
  return {common.finish()};
}

std::vector<PropertyReport> equivalence_suite(const TriMesh& m, const VoronoiDiagram& vd) {
  Property agree("theorem-equivalence", "clauses-agree");
  Property holds("theorem-equivalence", "mesh-triangles-are-delaunay");
  Property pieces("theorem-equivalence", "union-of-convex-pieces");
  pieces.note("weaker than the other clauses: holds for every triangle");
  for (TriangleId t = 0; t < static_cast<TriangleId>(m.triangle_count()); ++t) {
    const Triangle& tri = m.triangle(t);
    const bool delaunay = is_delaunay_triangle(m, vd, t);
    const bool strongly = cells_strongly_near(vd, tri[0], tri[1]) && cells_strongly_near(vd, tri[1], tri[2]) &&
                          cells_strongly_near(vd, tri[0], tri[2]);
    std::optional<bool> common;
    try {
      const auto v = common_vertex(vd, tri[0], tri[1], tri[2]);
      common = v && *v == circumcenter(m, t);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateIntersection) throw;
    }
    if (!common) {
      agree.skip();
      holds.skip();
    } else {
      agree.check(delaunay == *common && *common == strongly, [&] {
        std::ostringstream os;
        os << describe_triangle(m, t) << ": delaunay=" << delaunay << " common-vertex=" << *common
           << " strongly-near-cells=" << strongly;
        return os.str();
      });
      holds.check(delaunay && *common && strongly, [&] { return describe_triangle(m, t) + " is not Delaunay"; });
    }
    // Three closed edges and the open interior, each convex.
    const Polygon poly = triangle_polygon(m, t);
    bool convex_pieces = is_convex_polygon(poly);
    for (std::size_t i = 0; i < 3; ++i) {
      const Segment s = poly.edge(i);
      convex_pieces &= locate_point(s.a(), poly) == PointLocation::Boundary;
    }
    pieces.check(convex_pieces, [&] { return describe_triangle(m, t); });
  }
  return {agree.finish(), holds.finish(), pieces.finish()};
}

bool turns_left_everywhere(const Polygon& p) {
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    const Point& c = v[(i + 2) % v.size()];
    const Rational cross = (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
    if (cross < 0) return false;
  }
  return true;
}

std::vector<PropertyReport> regions_suite(const std::shared_ptr<const TriMesh>& mesh, CheckOutcome& outcome) {
  const TriMesh& m = *mesh;
  const auto regions = extract_regions(mesh);
  const auto count = static_cast<TriangleId>(m.triangle_count());
  for (const Region& r : regions) outcome.regions.push_back(r.triangles());

  auto describe_region = [](const Region& r) {
    std::ostringstream os;
    os << "region {";
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r.triangles()[i];
    os << "}";
    return os.str();
  };

  Property sound("regions", "clique-soundness");
  Property maximal("regions", "clique-maximality");
  Property additive("regions", "union-area-additivity");
  Property checker("regions", "convexity-checker");
  std::set<TriangleId> covered;
  std::size_t convex = 0;
  for (const Region& r : regions) {
    const auto& ids = r.triangles();
    covered.insert(ids.begin(), ids.end());
    bool clique = true;
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j) clique &= strongly_near_triangles(m, ids[i], ids[j]);
    sound.check(clique, [&] { return describe_region(r) + " has a pair without a common edge"; });

    std::optional<TriangleId> extension;
    for (TriangleId t = 0; t < count && !extension; ++t) {
      if (r.contains(t)) continue;
      bool joins_all = true;
      for (TriangleId u : ids) joins_all &= strongly_near_triangles(m, t, u);
      if (joins_all) extension = t;
    }
    maximal.check(!extension, [&] { return describe_region(r) + " extends by triangle " + std::to_string(*extension); });

    try {
      const Polygon u = region_union_polygon(r);
      Rational area = 0;
      for (TriangleId t : ids) area += triangle_polygon(m, t).twice_area();
      additive.check(u.twice_area() == area, [&] { return describe_region(r) + ": union area differs"; });
      const bool reported = is_region_convex(r);
      convex += reported ? 1 : 0;
      checker.check(reported == turns_left_everywhere(u),
                    [&] { return describe_region(r) + ": convexity verdict disagrees with the turn test"; });
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnionHasHole) throw;
      additive.fail(describe_region(r) + ": " + e.what());
      checker.fail(describe_region(r) + ": " + e.what());
    }
  }

  Property cover("regions", "cover");
  cover.check(covered.size() == m.triangle_count(), [&] {
    for (TriangleId t = 0; t < count; ++t)
      if (!covered.count(t)) return "triangle " + std::to_string(t) + " is in no region";
    return std::string();
  });

  Property proximal("regions", "proximal-pairs");
  const auto pairs = proximal_region_pairs(regions);
  const std::set<std::pair<std::size_t, std::size_t>> listed(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < regions.size(); ++i) {
    std::set<SiteIndex> vi;
    for (TriangleId t : regions[i].triangles()) vi.insert(m.triangle(t).begin(), m.triangle(t).end());
    for (std::size_t j = i + 1; j < regions.size(); ++j) {
      bool shares = false;
      for (TriangleId t : regions[j].triangles())
        for (SiteIndex x : m.triangle(t)) shares |= vi.count(x) > 0;
      proximal.check(shares == (listed.count({i, j}) > 0),
                     [&] { return "regions " + std::to_string(i) + " and " + std::to_string(j); });
    }
  }
  for (auto [i, j] : pairs) proximal.check(i < j, [&] { return "pair not ordered or reflexive"; });

  const Rational fraction = regions.empty() ? Rational(1) : Rational(static_cast<long>(convex), static_cast<long>(regions.size()));
  std::ostringstream note;
  note << convex << "/" << regions.size() << " regions have a convex union (measured, not asserted)";
  checker.note(note.str());
  outcome.metrics.push_back(Metric{"regions", std::to_string(regions.size())});
  outcome.metrics.push_back(Metric{"convex_regions", std::to_string(convex)});
  Rational reduced = fraction;
  reduced.canonicalize();
  outcome.metrics.push_back(Metric{"convex_region_fraction", to_exact_string(reduced)});

  return {sound.finish(), maximal.finish(), cover.finish(), additive.finish(), proximal.finish(), checker.finish()};
}

std::vector<PropertyReport> leader_suite(const TriMesh& m) {
  const auto neighborhoods = leader_neighborhoods(m);
  const auto count = static_cast<TriangleId>(m.triangle_count());
  std::vector<Polygon> polys;
  for (TriangleId t = 0; t < count; ++t) polys.push_back(triangle_polygon(m, t));

  Property match("leader", "neighborhoods-match-geometric-near");
  Property symmetric("leader", "neighborhood-symmetry");
  Property reflexive("leader", "reflexivity");
  for (TriangleId a = 0; a < count; ++a) {
    std::vector<TriangleId> expected;
    for (TriangleId b = 0; b < count; ++b)
      if (b != a && near(polys[static_cast<std::size_t>(a)], polys[static_cast<std::size_t>(b)]).is_near())
        expected.push_back(b);
    const auto& got = neighborhoods[static_cast<std::size_t>(a)].neighbors;
    match.check(got == expected, [&] { return "anchor " + describe_triangle(m, a); });
    for (TriangleId b : got) {
      const auto& back = neighborhoods[static_cast<std::size_t>(b)].neighbors;
      symmetric.check(std::find(back.begin(), back.end(), a) != back.end(),
                      [&] { return "triangle " + std::to_string(b) + " lacks " + std::to_string(a); });
    }
    reflexive.check(triangles_near(m, a, a) && near(polys[static_cast<std::size_t>(a)], polys[static_cast<std::size_t>(a)]).is_near(),
                    [&] { return describe_triangle(m, a); });
  }
  return {match.finish(), symmetric.finish(), reflexive.finish()};
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::Delaunay, Suite::Dual, Suite::Lemma2, Suite::TheoremEquivalence, Suite::Regions,
                  Suite::Leader, Suite::All}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Delaunay: return "delaunay";
    case Suite::Dual: return "dual";
    case Suite::Lemma2: return "lemma2";
    case Suite::TheoremEquivalence: return "theorem-equivalence";
    case Suite::Regions: return "regions";
    case Suite::Leader: return "leader";
    case Suite::All: return "all";
  }
  return "all";
}

bool CheckOutcome::all_passed() const {
  return std::none_of(properties.begin(), properties.end(),
                      [](const PropertyReport& p) { return p.status == CheckStatus::Fail; });
}

CheckOutcome run_checks(const TriMesh& mesh, Suite suite, const std::optional<Frame>& frame) {
  CheckOutcome outcome;
  auto shared = std::make_shared<const TriMesh>(mesh);
  std::optional<VoronoiDiagram> diagram;
  auto vd = [&]() -> const VoronoiDiagram& {
    // Built from the sites, not the mesh under test, so a wrong mesh is caught.
    if (!diagram) diagram = voronoi_diagram(shared->sites(), frame);
    return *diagram;
  };
  auto append = [&](std::vector<PropertyReport> reports) {
    for (auto& r : reports) outcome.properties.push_back(std::move(r));
  };
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Delaunay) append(delaunay_suite(*shared));
  if (all || suite == Suite::Dual) append(dual_suite(*shared, vd()));
  if (all || suite == Suite::Lemma2) append(lemma2_suite(*shared, vd()));
  if (all || suite == Suite::TheoremEquivalence) append(equivalence_suite(*shared, vd()));
  if (all || suite == Suite::Regions) append(regions_suite(shared, outcome));
  if (all || suite == Suite::Leader) append(leader_suite(*shared));
  return outcome;
}

}  // namespace proxtri::io
