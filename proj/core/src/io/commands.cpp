#include "proxtri/io/commands.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "proxtri/error.hpp"
#include "proxtri/io/checks.hpp"
#include "proxtri/io/generate.hpp"
#include "proxtri/io/sitefile.hpp"
#include "proxtri/io/svg.hpp"
#include "proxtri/proximity.hpp"

namespace proxtri::io {
namespace {

bool looks_like_document(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

TriMesh mesh_of(const Input& input) { return input.mesh ? *input.mesh : triangulate(input.sites); }

// A resolved element selector.
struct Element {
  enum class Kind { Triangle, Edge, Cell } kind;
  std::int32_t a = 0;
  std::int32_t b = 0;
  Geometry geometry;
};

std::optional<std::int32_t> parse_index(std::string_view s) {
  std::int32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) return std::nullopt;
  return v;
}

Element resolve(const std::string& selector, const TriMesh& mesh, const std::optional<VoronoiDiagram>& diagram) {
  auto unknown = [&](const std::string& why) { return Error(ErrorCode::UnknownSelector, "'" + selector + "': " + why); };
  if (selector.size() < 3 || selector[1] != ':') throw unknown("expected t:<id>, e:<i>-<j> or v:<site>");
  const std::string_view body = std::string_view(selector).substr(2);
  switch (selector[0]) {
    case 't': {
      auto t = parse_index(body);
      if (!t || !mesh.contains_triangle(*t)) throw unknown("no such triangle");
      return {Element::Kind::Triangle, *t, 0, triangle_polygon(mesh, *t)};
    }
    case 'e': {
      const auto dash = body.find('-');
      if (dash == std::string_view::npos) throw unknown("expected e:<i>-<j>");
      auto i = parse_index(body.substr(0, dash));
      auto j = parse_index(body.substr(dash + 1));
      if (!i || !j || !mesh.sites().contains_index(*i) || !mesh.sites().contains_index(*j) || !mesh.has_edge(*i, *j)) {
        throw unknown("no such mesh edge");
      }
      return {Element::Kind::Edge, *i, *j, Segment(mesh.point(*i), mesh.point(*j))};
    }
    case 'v': {
      auto s = parse_index(body);
      if (!s || !mesh.sites().contains_index(*s)) throw unknown("no such site");
      return {Element::Kind::Cell, *s, 0, diagram->cell(*s).polygon};
    }
    default:
      throw unknown("expected t:<id>, e:<i>-<j> or v:<site>");
  }
}

GeometryReport witness_report(const Witness& w) {
  return std::visit([](const auto& g) { return to_report(Shape(g)); }, w);
}

}  // namespace

void Output::write(const std::string& text) const {
  if (path) {
    write_text_file(*path, text);
  } else if (stream) {
    *stream << text;
    stream->flush();
  }
}

Frame parse_frame(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    auto v = try_parse_decimal(part);
    if (!v) throw Error(ErrorCode::Usage, "--frame: '" + part + "' is not a decimal literal");
    values.push_back(*v);
  }
  if (values.size() != 4) throw Error(ErrorCode::Usage, "--frame expects x0,y0,x1,y1");
  if (!(values[0] < values[2] && values[1] < values[3])) {
    throw Error(ErrorCode::Usage, "--frame needs x0 < x1 and y0 < y1");
  }
  return Frame{values[0], values[1], values[2], values[3]};
}

Input load_input(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  if (looks_like_document(text)) {
    const ResultDocument doc = parse_document(text);
    if (doc.triangles.empty()) return Input{SiteSet(doc.sites), std::nullopt};
    TriMesh mesh = mesh_from_document(doc);
    SiteSet sites = mesh.sites();
    return Input{std::move(sites), std::move(mesh)};
  }
  return Input{SiteSet(parse_sites(text, path.string())), std::nullopt};
}

int run_gen(const GlobalOptions& g, std::size_t n, const std::string& distribution, const Output& out) {
  const auto d = parse_distribution(distribution);
  if (!d) throw Error(ErrorCode::Usage, "unknown distribution '" + distribution + "'");
  out.write(format_sites(generate_sites(n, g.seed, *d)));
  return 0;
}

int run_triangulate(const GlobalOptions& g, const std::filesystem::path& in,
                    const std::optional<std::filesystem::path>& constraints, const Output& out) {
  const Input input = load_input(in);
  ResultDocument doc;
  doc.command = "triangulate";
  if (constraints) {
    const ConstraintSet l(parse_constraints(read_text_file(*constraints), constraints->string()));
    record_mesh(doc, constrained_triangulate(input.sites, l));
  } else {
    const TriMesh mesh = mesh_of(input);
    record_mesh(doc, mesh);
    const bool has_constraints =
        std::any_of(mesh.edges().begin(), mesh.edges().end(), [](const EdgeRecord& e) { return e.constrained; });
    if (!has_constraints) record_diagram(doc, voronoi_diagram(mesh.sites(), g.frame));
  }
  out.write(serialize(doc, g.format));
  return 0;
}

int run_check(const GlobalOptions& g, const std::filesystem::path& in, const std::string& suite, const Output& out) {
  const auto s = parse_suite(suite);
  if (!s) throw Error(ErrorCode::Usage, "unknown suite '" + suite + "'");
  const Input input = load_input(in);
  const TriMesh mesh = mesh_of(input);
  ResultDocument doc;
  doc.command = "check";
  doc.sites = mesh.sites().points();
  doc.triangles = mesh.triangles();
  CheckOutcome outcome = run_checks(mesh, *s, g.frame);
  doc.checks = std::move(outcome.properties);
  doc.metrics = std::move(outcome.metrics);
  doc.regions = std::move(outcome.regions);
  out.write(serialize(doc, g.format));
  return outcome.all_passed() ? 0 : 1;
}

int run_render(const GlobalOptions& g, const std::filesystem::path& in, const std::string& what, const Output& out) {
  const auto kind = parse_render_kind(what);
  if (!kind) throw Error(ErrorCode::Usage, "unknown render kind '" + what + "'");
  const Input input = load_input(in);
  out.write(render_svg(mesh_of(input), *kind, g.frame));
  return 0;
}

int run_query(const GlobalOptions& g, const std::filesystem::path& in, const std::string& relation,
              const std::string& a, const std::string& b, const Output& out) {
  if (relation != "near" && relation != "far" && relation != "strong") {
    throw Error(ErrorCode::Usage, "unknown relation '" + relation + "'");
  }
  const Input input = load_input(in);
  const TriMesh mesh = mesh_of(input);
  std::optional<VoronoiDiagram> diagram;
  if (a.starts_with("v:") || b.starts_with("v:")) diagram = voronoi_diagram(mesh.sites(), g.frame);
  const Element ea = resolve(a, mesh, diagram);
  const Element eb = resolve(b, mesh, diagram);

  QueryReport q{relation, a, b, false, std::nullopt};
  const ProximityVerdict verdict = near(ea.geometry, eb.geometry);
  if (relation == "near") {
    q.holds = verdict.is_near();
    if (verdict.witness) q.witness = witness_report(*verdict.witness);
  } else if (relation == "far") {
    q.holds = !verdict.is_near();
  } else {
    if (ea.kind != eb.kind || ea.kind == Element::Kind::Edge) {
      throw Error(ErrorCode::Usage, "strong proximity is defined for triangle pairs and cell pairs only");
    }
    q.holds = ea.kind == Element::Kind::Triangle ? strongly_near_triangles(mesh, ea.a, eb.a)
                                                 : cells_strongly_near(*diagram, ea.a, eb.a);
    if (q.holds) q.witness = witness_report(*verdict.witness);
  }
  ResultDocument doc;
  doc.command = "query";
  doc.sites = mesh.sites().points();
  doc.queries.push_back(std::move(q));
  out.write(serialize(doc, g.format));
  return 0;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Parse:
    case ErrorCode::Io:
    case ErrorCode::Usage:
    case ErrorCode::BadCount:
    case ErrorCode::UnknownSelector:
      return 2;
    default:
      return 1;
  }
}

}  // namespace proxtri::io
