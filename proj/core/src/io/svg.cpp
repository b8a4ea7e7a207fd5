#include "proxtri/io/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <sstream>

#include "proxtri/regions.hpp"

namespace proxtri::io {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  return s == "-0.00" ? "0.00" : s;
}

class Canvas {
 public:
  Canvas(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1, const SvgStyle& style)
      : x0_(to_double(x0)), y1_(to_double(y1)), style_(style) {
    const double w = to_double(x1) - x0_;
    const double h = y1_ - to_double(y0);
    scale_ = style.canvas / std::max(w, h);
    width_ = w * scale_ + 2 * style.border;
    height_ = h * scale_ + 2 * style.border;
  }

  // Screen y grows downwards.
  std::string x(const Point& p) const { return num((p.approx_x() - x0_) * scale_ + style_.border); }
  std::string y(const Point& p) const { return num((y1_ - p.approx_y()) * scale_ + style_.border); }
  std::string width() const { return num(width_); }
  std::string height() const { return num(height_); }

  std::string points(const std::vector<Point>& pts) const {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out += ' ';
      out += x(pts[i]) + "," + y(pts[i]);
    }
    return out;
  }

 private:
  double x0_;
  double y1_;
  double scale_ = 1;
  double width_ = 0;
  double height_ = 0;
  const SvgStyle& style_;
};

}  // namespace

std::optional<RenderKind> parse_render_kind(std::string_view name) {
  if (name == "delaunay") return RenderKind::Delaunay;
  if (name == "voronoi") return RenderKind::Voronoi;
  if (name == "overlay") return RenderKind::Overlay;
  if (name == "regions") return RenderKind::Regions;
  return std::nullopt;
}

std::string render_svg(const TriMesh& mesh, RenderKind what, const std::optional<Frame>& frame,
                       const SvgStyle& style) {
  const bool draw_voronoi = what == RenderKind::Voronoi || what == RenderKind::Overlay;
  std::optional<VoronoiDiagram> diagram;
  if (draw_voronoi) diagram = voronoi_diagram(mesh.sites(), frame);

  // View: sites and circumcenters plus 15% of the longer side.
  std::vector<Point> extent = mesh.sites().points();
  for (const Triangle& t : mesh.triangles()) {
    extent.push_back(circumcircle(mesh.point(t[0]), mesh.point(t[1]), mesh.point(t[2])).center);
  }
  Rational x0 = extent[0].x(), x1 = x0, y0 = extent[0].y(), y1 = y0;
  for (const Point& p : extent) {
    x0 = std::min(x0, p.x());
    x1 = std::max(x1, p.x());
    y0 = std::min(y0, p.y());
    y1 = std::max(y1, p.y());
  }
  Rational pad = std::max(x1 - x0, y1 - y0) * Rational(3, 20);
  x0 -= pad;
  y0 -= pad;
  x1 += pad;
  y1 += pad;
  const Polygon view({Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1)});
  const Canvas canvas(x0, y0, x1, y1, style);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas.width() << "\" height=\""
      << canvas.height() << "\" viewBox=\"0 0 " << canvas.width() << " " << canvas.height() << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"" << style.background << "\"/>\n";

  if (what == RenderKind::Regions) {
    const auto regions = extract_regions(std::make_shared<const TriMesh>(mesh));
    for (std::size_t i = 0; i < regions.size(); ++i) {
      svg << "<g class=\"region\" id=\"region-" << i << "\" fill=\"" << style.region_palette[i % 8]
          << "\" fill-opacity=\"" << num(style.region_opacity) << "\" stroke=\"none\">\n";
      for (TriangleId t : regions[i].triangles()) {
        const Triangle& tri = mesh.triangle(t);
        svg << "  <polygon points=\"" << canvas.points({mesh.point(tri[0]), mesh.point(tri[1]), mesh.point(tri[2])})
            << "\"/>\n";
      }
      svg << "</g>\n";
    }
  }

  if (what != RenderKind::Voronoi) {
    svg << "<g class=\"delaunay\" fill=\"none\" stroke=\"" << style.delaunay_stroke << "\" stroke-width=\""
        << num(style.delaunay_width) << "\" stroke-linejoin=\"round\">\n";
    for (const Triangle& t : mesh.triangles()) {
      svg << "  <polygon class=\"triangle\" points=\""
          << canvas.points({mesh.point(t[0]), mesh.point(t[1]), mesh.point(t[2])}) << "\"/>\n";
    }
    svg << "</g>\n";
  }

  if (draw_voronoi) {
    svg << "<g class=\"voronoi\" fill=\"none\" stroke=\"" << style.voronoi_stroke << "\" stroke-width=\""
        << num(style.voronoi_width) << "\" stroke-dasharray=\"" << style.voronoi_dash
        << "\" stroke-linecap=\"round\">\n";
    for (const VoronoiCell& cell : diagram->cells()) {
      for (const CellEdge& e : cell.edges) {
        if (e.on_frame() || *e.neighbor < cell.site) continue;
        const Shape clipped = intersect_closures(e.segment, view);
        if (const Segment* s = std::get_if<Segment>(&clipped)) {
          svg << "  <line x1=\"" << canvas.x(s->a()) << "\" y1=\"" << canvas.y(s->a()) << "\" x2=\""
              << canvas.x(s->b()) << "\" y2=\"" << canvas.y(s->b()) << "\"/>\n";
        }
      }
    }
    svg << "</g>\n";
    svg << "<g class=\"voronoi-vertices\" fill=\"" << style.background << "\" stroke=\"" << style.delaunay_stroke
        << "\" stroke-width=\"" << num(style.vertex_stroke_width) << "\">\n";
    for (const Point& v : diagram->vertices()) {
      svg << "  <circle cx=\"" << canvas.x(v) << "\" cy=\"" << canvas.y(v) << "\" r=\"" << num(style.vertex_radius)
          << "\"/>\n";
    }
    svg << "</g>\n";
  }

  svg << "<g class=\"sites\" fill=\"" << style.site_fill << "\" stroke=\"none\">\n";
  for (const Point& p : mesh.sites().points()) {
    svg << "  <circle cx=\"" << canvas.x(p) << "\" cy=\"" << canvas.y(p) << "\" r=\"" << num(style.site_radius)
        << "\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace proxtri::io
