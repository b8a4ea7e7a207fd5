#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "proxtri/delaunay.hpp"
#include "proxtri/voronoi.hpp"

namespace proxtri::io {

enum class RenderKind { Delaunay, Voronoi, Overlay, Regions };

std::optional<RenderKind> parse_render_kind(std::string_view name);

/// Fixed drawing constants; renders depend on nothing else.
struct SvgStyle {
  double canvas = 600.0;  // longer side of the drawing area, px
  double border = 20.0;   // px around the drawing area
  std::string_view background = "#ffffff";
  std::string_view delaunay_stroke = "#000000";
  double delaunay_width = 1.4;
  std::string_view voronoi_stroke = "#1f4e9c";
  double voronoi_width = 1.2;
  std::string_view voronoi_dash = "1.5,3";
  double site_radius = 3.5;
  std::string_view site_fill = "#000000";
  double vertex_radius = 4.0;
  double vertex_stroke_width = 1.2;
  std::string_view region_palette[8] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                        "#ff7f00", "#a65628", "#f781bf", "#999999"};
  double region_opacity = 0.35;
};

/// SVG 1.1 document of the mesh and/or its Voronoi diagram. The view is the
/// bounding box of the sites and Voronoi vertices with a margin; Voronoi
/// edges are clipped to it. Delaunay edges are solid, Voronoi edges dotted,
/// sites filled dots, Voronoi vertices open circles, regions shaded groups.
std::string render_svg(const TriMesh& mesh, RenderKind what, const std::optional<Frame>& frame = std::nullopt,
                       const SvgStyle& style = {});

}  // namespace proxtri::io
