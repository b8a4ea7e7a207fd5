#include "proxtri/delaunay.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "proxtri/error.hpp"

namespace proxtri {
namespace {

constexpr SiteIndex kGhost = -1;

std::string edge_name(SiteIndex a, SiteIndex b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

Triangle canonical_rotation(Triangle t) {
  auto smallest = std::min_element(t.begin(), t.end());
  std::rotate(t.begin(), smallest, t.end());
  return t;
}

// Incremental Bowyer-Watson over a triangle soup with ghost triangles. A
// ghost (u, w, G) sits across the hull edge w->u of a real triangle; its
// "circumdisk" is the open half-plane left of u->w plus the open segment uw.
class Builder {
 public:
  explicit Builder(const SiteSet& sites) : sites_(sites) {}

  void seed(SiteIndex a, SiteIndex b, SiteIndex c) {
    const int t0 = allocate({a, b, c});
    const int g0 = allocate({c, b, kGhost});
    const int g1 = allocate({a, c, kGhost});
    const int g2 = allocate({b, a, kGhost});
    link_group({t0, g0, g1, g2});
    last_ = t0;
  }

  void insert(SiteIndex p) {
    const int start = locate(p);
    collect_cavity(start, p);
    retriangulate(p);
  }

  std::vector<Triangle> real_triangles() const {
    std::vector<Triangle> out;
    for (const Tri& t : tris_) {
      if (t.alive && t.v[2] != kGhost) out.push_back(t.v);
    }
    return out;
  }

 private:
  struct Tri {
    Triangle v{};
    std::array<int, 3> nbr{-1, -1, -1};
    bool alive = true;
  };

  struct BoundaryEdge {
    SiteIndex from;
    SiteIndex to;
    int outside;
    int created = -1;
  };

  const Point& pt(SiteIndex i) const { return sites_[i]; }
  bool is_ghost(int t) const { return tris_[static_cast<std::size_t>(t)].v[2] == kGhost; }

  int allocate(const Triangle& v) {
    int id;
    if (!free_.empty()) {
      id = free_.back();
      free_.pop_back();
      tris_[static_cast<std::size_t>(id)] = Tri{v, {-1, -1, -1}, true};
    } else {
      id = static_cast<int>(tris_.size());
      tris_.push_back(Tri{v, {-1, -1, -1}, true});
      marks_.push_back(0);
    }
    return id;
  }

  // Links the triangles of a small closed group along shared edges.
  void link_group(const std::vector<int>& ids) {
    for (int a : ids) {
      Tri& ta = tris_[static_cast<std::size_t>(a)];
      for (int k = 0; k < 3; ++k) {
        const SiteIndex from = ta.v[(k + 1) % 3];
        const SiteIndex to = ta.v[(k + 2) % 3];
        for (int b : ids) {
          if (b == a) continue;
          const Tri& tb = tris_[static_cast<std::size_t>(b)];
          for (int j = 0; j < 3; ++j) {
            if (tb.v[(j + 1) % 3] == to && tb.v[(j + 2) % 3] == from) ta.nbr[k] = b;
          }
        }
      }
    }
  }

  bool in_conflict(int t, SiteIndex p) const {
    const Tri& tri = tris_[static_cast<std::size_t>(t)];
    if (tri.v[2] == kGhost) {
      const Point& u = pt(tri.v[0]);
      const Point& w = pt(tri.v[1]);
      const Orientation o = orientation(u, w, pt(p));
      if (o == Orientation::CCW) return true;
      return o == Orientation::Collinear && locate_point(pt(p), Segment(u, w)) == PointLocation::Interior;
    }
    const auto [a, b, c] = tri.v;
    return incircle_sign_perturbed(pt(a), static_cast<std::size_t>(a), pt(b), static_cast<std::size_t>(b),
                                   pt(c), static_cast<std::size_t>(c), pt(p), static_cast<std::size_t>(p)) > 0;
  }

  int locate(SiteIndex p) {
    int t = last_;
    if (t < 0 || !tris_[static_cast<std::size_t>(t)].alive || is_ghost(t)) t = any_real();
    const std::size_t limit = 4 * tris_.size() + 64;
    for (std::size_t step = 0; step < limit; ++step) {
      const Tri& tri = tris_[static_cast<std::size_t>(t)];
      bool moved = false;
      for (int i = 0; i < 3; ++i) {
        const int k = static_cast<int>((static_cast<std::size_t>(i) + step) % 3);
        const SiteIndex u = tri.v[(k + 1) % 3];
        const SiteIndex w = tri.v[(k + 2) % 3];
        if (orientation(pt(u), pt(w), pt(p)) == Orientation::CW) {
          t = tri.nbr[k];
          moved = true;
          break;
        }
      }
      if (!moved || is_ghost(t)) return t;
    }
    // The walk did not settle; any conflicting triangle seeds the cavity.
    for (std::size_t i = 0; i < tris_.size(); ++i) {
      if (tris_[i].alive && in_conflict(static_cast<int>(i), p)) return static_cast<int>(i);
    }
    throw Error(ErrorCode::InvalidMesh, "point location failed");
  }

  int any_real() const {
    for (std::size_t i = 0; i < tris_.size(); ++i) {
      if (tris_[i].alive && tris_[i].v[2] != kGhost) return static_cast<int>(i);
    }
    return 0;
  }

  void collect_cavity(int start, SiteIndex p) {
    ++stamp_;
    cavity_.clear();
    boundary_.clear();
    cavity_.push_back(start);
    marks_[static_cast<std::size_t>(start)] = stamp_;
    for (std::size_t i = 0; i < cavity_.size(); ++i) {
      const int c = cavity_[i];
      for (int k = 0; k < 3; ++k) {
        const int n = tris_[static_cast<std::size_t>(c)].nbr[k];
        if (marks_[static_cast<std::size_t>(n)] == stamp_) continue;
        if (in_conflict(n, p)) {
          marks_[static_cast<std::size_t>(n)] = stamp_;
          cavity_.push_back(n);
        }
      }
    }
    for (const int c : cavity_) {
      const Tri& tri = tris_[static_cast<std::size_t>(c)];
      for (int k = 0; k < 3; ++k) {
        const int n = tri.nbr[k];
        if (marks_[static_cast<std::size_t>(n)] == stamp_) continue;
        boundary_.push_back({tri.v[(k + 1) % 3], tri.v[(k + 2) % 3], n});
      }
    }
  }

  void retriangulate(SiteIndex p) {
    for (BoundaryEdge& be : boundary_) {
      if (be.from != kGhost && be.to != kGhost &&
          orientation(pt(be.from), pt(be.to), pt(p)) != Orientation::CCW) {
        throw Error(ErrorCode::InvalidMesh, "cavity is not star-shaped around the inserted site");
      }
    }
    // Cavity slots are released only after the new triangles exist so that
    // no id is reused while still referenced.
    for (BoundaryEdge& be : boundary_) {
      be.created = allocate({be.from, be.to, p});
      Tri& created = tris_[static_cast<std::size_t>(be.created)];
      created.nbr[2] = be.outside;
      Tri& outside = tris_[static_cast<std::size_t>(be.outside)];
      for (int j = 0; j < 3; ++j) {
        if (outside.v[(j + 1) % 3] == be.to && outside.v[(j + 2) % 3] == be.from) outside.nbr[j] = be.created;
      }
    }
    for (BoundaryEdge& be : boundary_) {
      Tri& created = tris_[static_cast<std::size_t>(be.created)];
      for (const BoundaryEdge& other : boundary_) {
        if (other.from == be.to) created.nbr[0] = other.created;  // across (to, p)
        if (other.to == be.from) created.nbr[1] = other.created;  // across (p, from)
      }
    }
    for (const int c : cavity_) {
      tris_[static_cast<std::size_t>(c)].alive = false;
      free_.push_back(c);
    }
    for (const BoundaryEdge& be : boundary_) {
      Tri& created = tris_[static_cast<std::size_t>(be.created)];
      int shift = 0;
      if (created.v[0] == kGhost) shift = 1;
      if (created.v[1] == kGhost) shift = 2;
      if (shift != 0) {
        std::rotate(created.v.begin(), created.v.begin() + shift, created.v.end());
        std::rotate(created.nbr.begin(), created.nbr.begin() + shift, created.nbr.end());
      } else {
        last_ = be.created;
      }
    }
  }

  const SiteSet& sites_;
  std::vector<Tri> tris_;
  std::vector<int> free_;
  std::vector<std::uint32_t> marks_;
  std::uint32_t stamp_ = 0;
  std::vector<int> cavity_;
  std::vector<BoundaryEdge> boundary_;
  int last_ = -1;
};

}  // namespace

SiteSet::SiteSet(std::vector<Point> points) : points_(std::move(points)) {
  sorted_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) sorted_[i] = static_cast<SiteIndex>(i);
  std::sort(sorted_.begin(), sorted_.end(), [this](SiteIndex a, SiteIndex b) {
    const auto& pa = points_[static_cast<std::size_t>(a)];
    const auto& pb = points_[static_cast<std::size_t>(b)];
    return pa < pb || (pa == pb && a < b);
  });
  for (std::size_t i = 1; i < sorted_.size(); ++i) {
    if ((*this)[sorted_[i - 1]] == (*this)[sorted_[i]]) {
      std::ostringstream msg;
      msg << "sites " << sorted_[i - 1] << " and " << sorted_[i] << " coincide at " << (*this)[sorted_[i]];
      throw Error(ErrorCode::DuplicateSite, msg.str());
    }
  }
}

std::optional<SiteIndex> SiteSet::find(const Point& p) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), p,
                             [this](SiteIndex i, const Point& q) { return (*this)[i] < q; });
  if (it != sorted_.end() && (*this)[*it] == p) return *it;
  return std::nullopt;
}

TriMesh TriMesh::from_triangles(SiteSet sites, std::vector<Triangle> triangles,
                                const std::vector<Edge>& constrained) {
  TriMesh mesh;
  mesh.sites_ = std::move(sites);
  for (Triangle& t : triangles) {
    for (SiteIndex v : t) {
      if (!mesh.sites_.contains_index(v)) {
        throw Error(ErrorCode::IndexOutOfRange, "triangle references site " + std::to_string(v));
      }
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw Error(ErrorCode::InvalidMesh, "triangle repeats a vertex");
    }
    if (orientation(mesh.sites_[t[0]], mesh.sites_[t[1]], mesh.sites_[t[2]]) != Orientation::CCW) {
      throw Error(ErrorCode::InvalidMesh, "triangle (" + std::to_string(t[0]) + ", " + std::to_string(t[1]) +
                                              ", " + std::to_string(t[2]) + ") is not counterclockwise");
    }
    t = canonical_rotation(t);
  }
  std::sort(triangles.begin(), triangles.end());
  if (std::adjacent_find(triangles.begin(), triangles.end()) != triangles.end()) {
    throw Error(ErrorCode::InvalidMesh, "duplicate triangle");
  }
  mesh.triangles_ = std::move(triangles);

  struct HalfEdge {
    Edge edge;
    TriangleId tri;
    bool forward;  // traversed u -> v
  };
  std::vector<HalfEdge> halves;
  halves.reserve(mesh.triangles_.size() * 3);
  for (std::size_t t = 0; t < mesh.triangles_.size(); ++t) {
    const Triangle& tri = mesh.triangles_[t];
    for (int k = 0; k < 3; ++k) {
      const SiteIndex a = tri[(k + 1) % 3];
      const SiteIndex b = tri[(k + 2) % 3];
      halves.push_back({Edge::of(a, b), static_cast<TriangleId>(t), a < b});
    }
  }
  std::sort(halves.begin(), halves.end(), [](const HalfEdge& l, const HalfEdge& r) {
    return l.edge < r.edge || (l.edge == r.edge && l.tri < r.tri);
  });
  for (std::size_t i = 0; i < halves.size();) {
    std::size_t j = i;
    while (j < halves.size() && halves[j].edge == halves[i].edge) ++j;
    if (j - i > 2) throw Error(ErrorCode::InvalidMesh, "edge " + edge_name(halves[i].edge.u, halves[i].edge.v) + " has more than two triangles");
    EdgeRecord rec;
    rec.edge = halves[i].edge;
    rec.triangles[0] = halves[i].tri;
    if (j - i == 2) {
      if (halves[i].forward == halves[i + 1].forward) {
        throw Error(ErrorCode::InvalidMesh, "triangles on edge " + edge_name(rec.edge.u, rec.edge.v) + " overlap");
      }
      rec.triangles[1] = halves[i + 1].tri;
    }
    mesh.edges_.push_back(rec);
    i = j;
  }

  mesh.neighbors_.assign(mesh.triangles_.size(), {-1, -1, -1});
  for (std::size_t t = 0; t < mesh.triangles_.size(); ++t) {
    const Triangle& tri = mesh.triangles_[t];
    for (int k = 0; k < 3; ++k) {
      const EdgeRecord* rec = mesh.find_edge(tri[(k + 1) % 3], tri[(k + 2) % 3]);
      const TriangleId self = static_cast<TriangleId>(t);
      mesh.neighbors_[t][static_cast<std::size_t>(k)] = rec->triangles[0] == self ? rec->triangles[1] : rec->triangles[0];
    }
  }

  for (const Edge& e : constrained) {
    auto it = std::lower_bound(mesh.edges_.begin(), mesh.edges_.end(), Edge::of(e.u, e.v),
                               [](const EdgeRecord& r, const Edge& key) { return r.edge < key; });
    if (it == mesh.edges_.end() || it->edge != Edge::of(e.u, e.v)) {
      throw Error(ErrorCode::UnknownEdge, "constrained edge " + edge_name(e.u, e.v) + " is not in the mesh");
    }
    it->constrained = true;
  }

  mesh.incident_.assign(mesh.sites_.size(), {});
  for (std::size_t t = 0; t < mesh.triangles_.size(); ++t) {
    for (SiteIndex v : mesh.triangles_[t]) {
      mesh.incident_[static_cast<std::size_t>(v)].push_back(static_cast<TriangleId>(t));
    }
  }
  return mesh;
}

const Triangle& TriMesh::triangle(TriangleId t) const {
  if (!contains_triangle(t)) throw Error(ErrorCode::IndexOutOfRange, "triangle id " + std::to_string(t));
  return triangles_[static_cast<std::size_t>(t)];
}

const std::array<TriangleId, 3>& TriMesh::neighbors(TriangleId t) const {
  if (!contains_triangle(t)) throw Error(ErrorCode::IndexOutOfRange, "triangle id " + std::to_string(t));
  return neighbors_[static_cast<std::size_t>(t)];
}

const EdgeRecord* TriMesh::find_edge(SiteIndex a, SiteIndex b) const {
  const Edge key = Edge::of(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key,
                             [](const EdgeRecord& r, const Edge& k) { return r.edge < k; });
  if (it == edges_.end() || it->edge != key) return nullptr;
  return &*it;
}

const EdgeRecord& TriMesh::edge(SiteIndex a, SiteIndex b) const {
  if (const EdgeRecord* rec = find_edge(a, b)) return *rec;
  throw Error(ErrorCode::UnknownEdge, "edge " + edge_name(a, b) + " is not in the mesh");
}

std::vector<SiteIndex> TriMesh::vertex_neighbors(SiteIndex i) const {
  std::vector<SiteIndex> out;
  for (TriangleId t : incident_triangles(i)) {
    for (SiteIndex v : triangles_[static_cast<std::size_t>(t)]) {
      if (v != i) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<TriangleId>& TriMesh::incident_triangles(SiteIndex i) const {
  if (!sites_.contains_index(i)) throw Error(ErrorCode::IndexOutOfRange, "site index " + std::to_string(i));
  return incident_[static_cast<std::size_t>(i)];
}

bool TriMesh::is_hull_vertex(SiteIndex i) const {
  for (SiteIndex n : vertex_neighbors(i)) {
    if (find_edge(i, n)->on_hull()) return true;
  }
  return false;
}

std::size_t TriMesh::hull_vertex_count() const {
  std::vector<SiteIndex> hull;
  for (const EdgeRecord& e : edges_) {
    if (e.on_hull()) {
      hull.push_back(e.edge.u);
      hull.push_back(e.edge.v);
    }
  }
  std::sort(hull.begin(), hull.end());
  return static_cast<std::size_t>(std::unique(hull.begin(), hull.end()) - hull.begin());
}

bool operator==(const TriMesh& a, const TriMesh& b) {
  if (a.sites_.points() != b.sites_.points() || a.triangles_ != b.triangles_) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    if (a.edges_[i].constrained != b.edges_[i].constrained) return false;
  }
  return true;
}

std::vector<Edge> ConstraintSet::resolve(const SiteSet& sites) const {
  std::vector<Edge> out;
  for (const Segment& s : segments_) {
    auto a = sites.find(s.a());
    auto b = sites.find(s.b());
    if (!a || !b) {
      std::ostringstream msg;
      msg << "constraint endpoint " << (a ? s.b() : s.a()) << " is not a site";
      throw Error(ErrorCode::UnknownConstraintEndpoint, msg.str());
    }
    out.push_back(Edge::of(*a, *b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TriMesh triangulate(const SiteSet& sites) {
  const auto n = static_cast<SiteIndex>(sites.size());
  if (n < 3) throw Error(ErrorCode::TooFewSites, "need at least 3 sites, got " + std::to_string(n));

  SiteIndex third = -1;
  for (SiteIndex k = 2; k < n; ++k) {
    if (orientation(sites[0], sites[1], sites[k]) != Orientation::Collinear) {
      third = k;
      break;
    }
  }
  if (third < 0) throw Error(ErrorCode::AllCollinear, "all " + std::to_string(n) + " sites are collinear");

  Builder builder(sites);
  if (orientation(sites[0], sites[1], sites[third]) == Orientation::CCW) {
    builder.seed(0, 1, third);
  } else {
    builder.seed(1, 0, third);
  }
  for (SiteIndex k = 2; k < n; ++k) {
    if (k != third) builder.insert(k);
  }
  return TriMesh::from_triangles(sites, builder.real_triangles());
}

bool is_locally_delaunay(const TriMesh& mesh, Edge e) {
  const EdgeRecord& rec = mesh.edge(e.u, e.v);
  if (rec.on_hull() || rec.constrained) return true;

  auto apex = [&](TriangleId t) {
    for (SiteIndex v : mesh.triangles()[static_cast<std::size_t>(t)]) {
      if (v != rec.edge.u && v != rec.edge.v) return v;
    }
    return SiteIndex{-1};
  };
  const Triangle& first = mesh.triangles()[static_cast<std::size_t>(rec.triangles[0])];
  const SiteIndex across = apex(rec.triangles[1]);
  return in_circumcircle(mesh.point(first[0]), mesh.point(first[1]), mesh.point(first[2]),
                         mesh.point(across)) != CircleSide::Inside;
}

std::vector<TriangleId> adjacency(const TriMesh& mesh, TriangleId t) {
  std::vector<TriangleId> out;
  for (TriangleId n : mesh.neighbors(t)) {
    if (n >= 0) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_pair(const SiteSet& sites, SiteIndex p, SiteIndex q) {
  if (!sites.contains_index(p) || !sites.contains_index(q)) {
    throw Error(ErrorCode::IndexOutOfRange, "site pair " + edge_name(p, q));
  }
  if (p == q) throw Error(ErrorCode::IndexOutOfRange, "site pair " + edge_name(p, q) + " is not distinct");
}

bool shares_interior_point(const Segment& s, const Segment& t) {
  auto hit = segment_intersection(s, t);
  if (std::holds_alternative<Segment>(hit)) return true;
  if (const auto* x = std::get_if<Point>(&hit)) {
    return locate_point(*x, s) == PointLocation::Interior && locate_point(*x, t) == PointLocation::Interior;
  }
  return false;
}

// Whether site s can be seen from some point of the open segment pq, with
// the constraints (other than pq) acting as opaque walls. Visibility only
// changes where a ray from s through a constraint endpoint meets line pq, so
// it suffices to probe those parameters and the midpoints between them.
bool visible_from_open_segment(const Point& s, const Point& p, const Point& q,
                               const std::vector<Segment>& walls) {
  if (walls.empty()) return true;
  std::vector<Rational> params{Rational(0), Rational(1)};
  const Rational dx = q.x() - p.x();
  const Rational dy = q.y() - p.y();
  for (const Segment& w : walls) {
    for (const Point* e : {&w.a(), &w.b()}) {
      if (*e == s) continue;
      const Rational ex = e->x() - s.x();
      const Rational ey = e->y() - s.y();
      const Rational denom = dx * ey - dy * ex;
      if (sgn(denom) == 0) continue;
      // p + t (q - p) on the line through s and e.
      const Rational t = ((s.x() - p.x()) * ey - (s.y() - p.y()) * ex) / denom;
      if (t > 0 && t < 1) params.push_back(t);
    }
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());

  std::vector<Rational> probes;
  for (std::size_t i = 0; i + 1 < params.size(); ++i) {
    if (i > 0) probes.push_back(params[i]);
    probes.push_back((params[i] + params[i + 1]) / 2);
  }
  for (const Rational& t : probes) {
    Point x(p.x() + t * dx, p.y() + t * dy);
    if (x == s) continue;
    Segment sight(x, s);
    bool blocked = false;
    for (const Segment& w : walls) {
      if (shares_interior_point(sight, w)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) return true;
  }
  return false;
}

}  // namespace

bool is_visible(const SiteSet& sites, const ConstraintSet& constraints, SiteIndex p, SiteIndex q) {
  check_pair(sites, p, q);
  const Segment pq(sites[p], sites[q]);
  for (SiteIndex s = 0; s < static_cast<SiteIndex>(sites.size()); ++s) {
    if (s == p || s == q) continue;
    if (locate_point(sites[s], pq) == PointLocation::Interior) return false;
  }
  for (const Segment& c : constraints.segments()) {
    if (c == pq) continue;
    auto hit = segment_intersection(pq, c);
    if (std::holds_alternative<Segment>(hit)) return false;
    if (const auto* x = std::get_if<Point>(&hit); x && locate_point(*x, pq) == PointLocation::Interior) {
      return false;
    }
  }
  return true;
}

bool is_constrained_delaunay_edge(const SiteSet& sites, const ConstraintSet& constraints, SiteIndex p,
                                  SiteIndex q) {
  check_pair(sites, p, q);
  const Point& a = sites[p];
  const Point& b = sites[q];
  const Segment pq(a, b);
  std::vector<Segment> walls;
  for (const Segment& c : constraints.segments()) {
    if (c == pq) return true;
    walls.push_back(c);
  }
  if (!is_visible(sites, constraints, p, q)) return false;

  // Circles through a and b have centers m + t n on the bisector, with n the
  // left normal of ab. A site s on the left is inside exactly when t > t_s,
  // one on the right when t < t_s, where t_s is the parameter of the circle
  // through a, b, s. Some circle works iff every right bound is at most
  // every left bound.
  const Rational mx = (a.x() + b.x()) / 2;
  const Rational my = (a.y() + b.y()) / 2;
  const Rational nx = a.y() - b.y();
  const Rational ny = b.x() - a.x();
  const Rational half_chord_sq = (mx - a.x()) * (mx - a.x()) + (my - a.y()) * (my - a.y());
  std::optional<Rational> lowest_left;
  std::optional<Rational> highest_right;
  for (SiteIndex s = 0; s < static_cast<SiteIndex>(sites.size()); ++s) {
    if (s == p || s == q) continue;
    const Point& site = sites[s];
    const Orientation side = orientation(a, b, site);
    if (side == Orientation::Collinear) continue;  // outside the open chord: never enclosed
    if (!visible_from_open_segment(site, a, b, walls)) continue;
    const Rational ox = mx - site.x();
    const Rational oy = my - site.y();
    const Rational t = (half_chord_sq - (ox * ox + oy * oy)) / (2 * (nx * ox + ny * oy));
    if (side == Orientation::CCW) {
      if (!lowest_left || t < *lowest_left) lowest_left = t;
    } else {
      if (!highest_right || t > *highest_right) highest_right = t;
    }
  }
  if (!lowest_left || !highest_right) return true;
  return *highest_right <= *lowest_left;
}

}  // namespace proxtri
