#include "proxtri/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "proxtri/error.hpp"

namespace proxtri {
namespace {

struct LabeledVertex {
  Point point;
  std::optional<SiteIndex> edge_label;  // label of the edge leaving this vertex
};

// Clips a convex labeled loop to {x : g(x) >= 0}, g(x) = c + nx*x + ny*y.
// New edges along the clip line take `label`.
std::vector<LabeledVertex> clip(const std::vector<LabeledVertex>& loop, const Rational& c, const Rational& nx,
                                const Rational& ny, SiteIndex label) {
  auto g = [&](const Point& x) -> Rational { return c + nx * x.x() + ny * x.y(); };
  std::vector<LabeledVertex> out;
  out.reserve(loop.size() + 1);
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const LabeledVertex& u = loop[i];
    const LabeledVertex& w = loop[(i + 1) % loop.size()];
    const Rational gu = g(u.point);
    const Rational gw = g(w.point);
    const int su = sgn(gu);
    const int sw = sgn(gw);
    if (su >= 0) {
      out.push_back(u);
      if (sw < 0) {
        if (su > 0) {
          Rational t = gu / (gu - gw);
          out.push_back({Point(u.point.x() + t * (w.point.x() - u.point.x()),
                               u.point.y() + t * (w.point.y() - u.point.y())),
                         label});
        } else {
          out.back().edge_label = label;
        }
      }
    } else if (sw > 0) {
      Rational t = gu / (gu - gw);
      out.push_back({Point(u.point.x() + t * (w.point.x() - u.point.x()),
                           u.point.y() + t * (w.point.y() - u.point.y())),
                     u.edge_label});
    }
  }
  return out;
}

// Drops zero-length edges and merges collinear runs with equal labels.
void tidy(std::vector<LabeledVertex>& loop) {
  bool changed = true;
  while (changed && loop.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const std::size_t next = (i + 1) % loop.size();
      if (loop[i].point == loop[next].point) {
        loop.erase(loop.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      const std::size_t prev = (i + loop.size() - 1) % loop.size();
      if (loop[prev].edge_label == loop[i].edge_label &&
          orientation(loop[prev].point, loop[i].point, loop[next].point) == Orientation::Collinear) {
        loop.erase(loop.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
}

bool same_border_side(const Frame& f, const Point& a, const Point& b) {
  return (a.x() == f.x0 && b.x() == f.x0) || (a.x() == f.x1 && b.x() == f.x1) ||
         (a.y() == f.y0 && b.y() == f.y0) || (a.y() == f.y1 && b.y() == f.y1);
}

void check_site(const VoronoiDiagram& d, SiteIndex i) {
  if (!d.sites().contains_index(i)) throw Error(ErrorCode::IndexOutOfRange, "site index " + std::to_string(i));
}

struct Box {
  double x0, y0, x1, y1;
};

Box approximate_box(const Polygon& poly) {
  Box b{INFINITY, INFINITY, -INFINITY, -INFINITY};
  for (const Point& p : poly.vertices()) {
    b.x0 = std::min(b.x0, p.approx_x());
    b.y0 = std::min(b.y0, p.approx_y());
    b.x1 = std::max(b.x1, p.approx_x());
    b.y1 = std::max(b.y1, p.approx_y());
  }
  return b;
}

// Conservative rejection: the boxes are apart by more than rounding could hide.
bool boxes_clearly_apart(const Box& a, const Box& b) {
  const double scale = std::max({std::fabs(a.x0), std::fabs(a.x1), std::fabs(a.y0), std::fabs(a.y1),
                                 std::fabs(b.x0), std::fabs(b.x1), std::fabs(b.y0), std::fabs(b.y1), 1.0});
  const double slack = 1e-9 * scale;
  return a.x1 + slack < b.x0 || b.x1 + slack < a.x0 || a.y1 + slack < b.y0 || b.y1 + slack < a.y0;
}

}  // namespace

Polygon Frame::to_polygon() const {
  return Polygon({Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1)});
}

bool Frame::strictly_contains(const Point& p) const {
  return x0 < p.x() && p.x() < x1 && y0 < p.y() && p.y() < y1;
}

bool Frame::on_border(const Point& p) const {
  const bool inside = x0 <= p.x() && p.x() <= x1 && y0 <= p.y() && p.y() <= y1;
  return inside && !strictly_contains(p);
}

VoronoiDiagram::VoronoiDiagram(SiteSet sites, Frame frame, std::vector<VoronoiCell> cells,
                               std::vector<Point> vertices)
    : sites_(std::move(sites)), frame_(std::move(frame)), cells_(std::move(cells)), vertices_(std::move(vertices)) {}

const VoronoiCell& VoronoiDiagram::cell(SiteIndex i) const {
  check_site(*this, i);
  return cells_[static_cast<std::size_t>(i)];
}

Frame default_frame(const TriMesh& mesh) {
  std::vector<Point> pts = mesh.sites().points();
  for (const Triangle& t : mesh.triangles()) {
    pts.push_back(circumcircle(mesh.point(t[0]), mesh.point(t[1]), mesh.point(t[2])).center);
  }
  Rational x0 = pts.front().x(), x1 = x0, y0 = pts.front().y(), y1 = y0;
  for (const Point& p : pts) {
    if (p.x() < x0) x0 = p.x();
    if (p.x() > x1) x1 = p.x();
    if (p.y() < y0) y0 = p.y();
    if (p.y() > y1) y1 = p.y();
  }
  const Rational margin = 2 * ((x1 - x0) + (y1 - y0));
  return Frame{x0 - margin, y0 - margin, x1 + margin, y1 + margin};
}

VoronoiDiagram voronoi_diagram(const SiteSet& sites, const std::optional<Frame>& frame) {
  return voronoi_diagram(triangulate(sites), frame);
}

VoronoiDiagram voronoi_diagram(const TriMesh& mesh, const std::optional<Frame>& requested) {
  const SiteSet& sites = mesh.sites();
  std::vector<Point> vertices;
  vertices.reserve(mesh.triangle_count());
  for (const Triangle& t : mesh.triangles()) {
    vertices.push_back(circumcircle(mesh.point(t[0]), mesh.point(t[1]), mesh.point(t[2])).center);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  const Frame frame = requested ? *requested : default_frame(mesh);
  if (!(frame.x0 < frame.x1 && frame.y0 < frame.y1)) {
    throw Error(ErrorCode::FrameTooSmall, "frame is empty");
  }
  for (const Point& p : sites.points()) {
    if (!frame.strictly_contains(p)) {
      std::ostringstream msg;
      msg << "frame does not strictly contain site " << p;
      throw Error(ErrorCode::FrameTooSmall, msg.str());
    }
  }
  for (const Point& v : vertices) {
    if (!frame.strictly_contains(v)) {
      std::ostringstream msg;
      msg << "frame does not strictly contain Voronoi vertex " << v;
      throw Error(ErrorCode::FrameTooSmall, msg.str());
    }
  }

  std::vector<VoronoiCell> cells;
  cells.reserve(sites.size());
  for (SiteIndex p = 0; p < static_cast<SiteIndex>(sites.size()); ++p) {
    std::vector<LabeledVertex> loop{{Point(frame.x0, frame.y0), std::nullopt},
                                    {Point(frame.x1, frame.y0), std::nullopt},
                                    {Point(frame.x1, frame.y1), std::nullopt},
                                    {Point(frame.x0, frame.y1), std::nullopt}};
    const Point& site = sites[p];
    const Rational p2 = site.x() * site.x() + site.y() * site.y();
    for (SiteIndex q : mesh.vertex_neighbors(p)) {
      const Point& other = sites[q];
      // |x - p|^2 <= |x - q|^2  <=>  (q2 - p2) - 2 (q - p) . x >= 0
      const Rational q2 = other.x() * other.x() + other.y() * other.y();
      loop = clip(loop, q2 - p2, -2 * (other.x() - site.x()), -2 * (other.y() - site.y()), q);
    }
    tidy(loop);

    VoronoiCell cell{p, [&] {
                       std::vector<Point> pts;
                       pts.reserve(loop.size());
                       for (const auto& lv : loop) pts.push_back(lv.point);
                       return Polygon(std::move(pts));
                     }(),
                     mesh.is_hull_vertex(p), {}};
    for (std::size_t i = 0; i < loop.size(); ++i) {
      cell.edges.push_back({Segment(loop[i].point, loop[(i + 1) % loop.size()].point), loop[i].edge_label});
    }
    cells.push_back(std::move(cell));
  }
  return VoronoiDiagram(sites, frame, std::move(cells), std::move(vertices));
}

Shape cell_intersection(const VoronoiDiagram& diagram, SiteIndex p, SiteIndex q) {
  const Polygon& a = diagram.cell(p).polygon;
  const Polygon& b = diagram.cell(q).polygon;
  if (boxes_clearly_apart(approximate_box(a), approximate_box(b))) return Empty{};
  return intersect_closures(a, b);
}

bool cells_strongly_near(const VoronoiDiagram& diagram, SiteIndex p, SiteIndex q) {
  check_site(diagram, p);
  check_site(diagram, q);
  if (p == q) throw Error(ErrorCode::IndexOutOfRange, "strong proximity needs two distinct cells");
  const Shape shared = cell_intersection(diagram, p, q);
  const auto* seg = std::get_if<Segment>(&shared);
  if (seg == nullptr) return false;
  return !same_border_side(diagram.frame(), seg->a(), seg->b());
}

std::optional<Point> common_vertex(const VoronoiDiagram& diagram, SiteIndex p, SiteIndex q, SiteIndex r) {
  check_site(diagram, p);
  check_site(diagram, q);
  check_site(diagram, r);
  if (p == q || q == r || p == r) {
    throw Error(ErrorCode::IndexOutOfRange, "common_vertex needs three distinct sites");
  }
  const Shape pq = cell_intersection(diagram, p, q);
  if (is_empty(pq)) return std::nullopt;
  const Shape triple = intersect_closures(pq, diagram.cell(r).polygon);
  if (is_empty(triple)) return std::nullopt;
  const auto* u = std::get_if<Point>(&triple);
  if (u == nullptr) {
    throw Error(ErrorCode::DegenerateIntersection, "closed cells share more than a point");
  }
  const Rational radius_sq = squared_distance(*u, diagram.sites()[p]);
  for (SiteIndex s = 0; s < static_cast<SiteIndex>(diagram.sites().size()); ++s) {
    if (s == p || s == q || s == r) continue;
    if (squared_distance(*u, diagram.sites()[s]) == radius_sq) {
      std::ostringstream msg;
      msg << "four or more cells meet at " << *u << " (sites " << p << ", " << q << ", " << r << ", " << s
          << " are cocircular)";
      throw Error(ErrorCode::DegenerateIntersection, msg.str());
    }
  }
  return *u;
}

}  // namespace proxtri
