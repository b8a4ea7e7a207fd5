#include "proxtri/io/document.hpp"

#include <json.hpp>

#include "proxtri/error.hpp"

namespace proxtri::io {
namespace {

using Json = nlohmann::ordered_json;

Json point_json(const Point& p) { return Json::array({to_exact_string(p.x()), to_exact_string(p.y())}); }

Json points_json(const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const Point& p : pts) out.push_back(point_json(p));
  return out;
}

Json geometry_json(const GeometryReport& g) {
  return Json{{"kind", g.kind}, {"points", points_json(g.points)}};
}

Rational rational_of(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::Parse, "expected a rational string, found " + j.dump());
  auto value = try_parse_rational(j.get<std::string>());
  if (!value) throw Error(ErrorCode::Parse, "bad rational " + j.dump());
  return *value;
}

Point point_of(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::Parse, "expected [x, y], found " + j.dump());
  return Point(rational_of(j[0]), rational_of(j[1]));
}

std::vector<Point> points_of(const Json& j) {
  std::vector<Point> out;
  for (const Json& p : j) out.push_back(point_of(p));
  return out;
}

GeometryReport geometry_of(const Json& j) {
  return GeometryReport{j.at("kind").get<std::string>(), points_of(j.at("points"))};
}

CheckStatus status_of(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "degenerate-skip") return CheckStatus::DegenerateSkip;
  throw Error(ErrorCode::Parse, "unknown check status '" + s + "'");
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::DegenerateSkip: return "degenerate-skip";
  }
  return "fail";
}

std::string serialize(const ResultDocument& doc, Format format) {
  Json j;
  j["schema"] = "proxtri-result";
  j["schema_version"] = kSchemaVersion;
  j["command"] = doc.command;
  if (!doc.sites.empty()) j["sites"] = points_json(doc.sites);
  if (!doc.triangles.empty()) {
    Json tris = Json::array();
    for (const Triangle& t : doc.triangles) tris.push_back({t[0], t[1], t[2]});
    j["triangles"] = std::move(tris);
  }
  if (!doc.edges.empty()) {
    Json edges = Json::array();
    for (const EdgeReport& e : doc.edges) {
      edges.push_back(Json{{"u", e.edge.u},
                           {"v", e.edge.v},
                           {"hull", e.hull},
                           {"constrained", e.constrained},
                           {"locally_delaunay", e.locally_delaunay}});
    }
    j["edges"] = std::move(edges);
  }
  if (doc.frame) {
    const auto& f = *doc.frame;
    j["frame"] = Json::array(
        {to_exact_string(f[0]), to_exact_string(f[1]), to_exact_string(f[2]), to_exact_string(f[3])});
  }
  if (!doc.cells.empty()) {
    Json cells = Json::array();
    for (const CellReport& c : doc.cells) {
      cells.push_back(Json{{"site", c.site}, {"unbounded", c.unbounded}, {"loop", points_json(c.loop)}});
    }
    j["cells"] = std::move(cells);
  }
  if (!doc.regions.empty()) j["regions"] = doc.regions;
  if (!doc.queries.empty()) {
    Json queries = Json::array();
    for (const QueryReport& q : doc.queries) {
      Json item{{"relation", q.relation}, {"a", q.a}, {"b", q.b}, {"holds", q.holds}};
      item["witness"] = q.witness ? geometry_json(*q.witness) : Json(nullptr);
      queries.push_back(std::move(item));
    }
    j["queries"] = std::move(queries);
  }
  if (!doc.checks.empty()) {
    Json checks = Json::array();
    for (const PropertyReport& c : doc.checks) {
      checks.push_back(Json{{"suite", c.suite},
                            {"name", c.name},
                            {"status", std::string(to_string(c.status))},
                            {"cases", c.cases},
                            {"failures", c.failures},
                            {"skipped", c.skipped},
                            {"counterexample", c.counterexample},
                            {"note", c.note}});
    }
    j["checks"] = std::move(checks);
  }
  if (!doc.metrics.empty()) {
    Json metrics = Json::object();
    for (const Metric& m : doc.metrics) metrics[m.name] = m.value;
    j["metrics"] = std::move(metrics);
  }
  return format == Format::Document ? j.dump(2) + "\n" : j.dump() + "\n";
}

ResultDocument parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed document: ") + e.what());
  }
  try {
    if (j.value("schema", "") != "proxtri-result") throw Error(ErrorCode::Parse, "not a proxtri result document");
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw Error(ErrorCode::Parse, "unsupported schema_version " + j.at("schema_version").dump());
    }
    ResultDocument doc;
    doc.command = j.at("command").get<std::string>();
    if (j.contains("sites")) doc.sites = points_of(j["sites"]);
    if (j.contains("triangles")) {
      for (const Json& t : j["triangles"]) doc.triangles.push_back({t.at(0).get<SiteIndex>(), t.at(1).get<SiteIndex>(), t.at(2).get<SiteIndex>()});
    }
    if (j.contains("edges")) {
      for (const Json& e : j["edges"]) {
        doc.edges.push_back(EdgeReport{Edge::of(e.at("u").get<SiteIndex>(), e.at("v").get<SiteIndex>()),
                                       e.at("hull").get<bool>(), e.at("constrained").get<bool>(),
                                       e.at("locally_delaunay").get<bool>()});
      }
    }
    if (j.contains("frame")) {
      const Json& f = j["frame"];
      doc.frame = std::array<Rational, 4>{rational_of(f.at(0)), rational_of(f.at(1)), rational_of(f.at(2)),
                                          rational_of(f.at(3))};
    }
    if (j.contains("cells")) {
      for (const Json& c : j["cells"]) {
        doc.cells.push_back(CellReport{c.at("site").get<SiteIndex>(), points_of(c.at("loop")),
                                       c.at("unbounded").get<bool>()});
      }
    }
    if (j.contains("regions")) doc.regions = j["regions"].get<std::vector<std::vector<TriangleId>>>();
    if (j.contains("queries")) {
      for (const Json& q : j["queries"]) {
        QueryReport r{q.at("relation").get<std::string>(), q.at("a").get<std::string>(),
                      q.at("b").get<std::string>(), q.at("holds").get<bool>(), std::nullopt};
        if (!q.at("witness").is_null()) r.witness = geometry_of(q["witness"]);
        doc.queries.push_back(std::move(r));
      }
    }
    if (j.contains("checks")) {
      for (const Json& c : j["checks"]) {
        doc.checks.push_back(PropertyReport{c.at("suite").get<std::string>(), c.at("name").get<std::string>(),
                                            status_of(c.at("status").get<std::string>()),
                                            c.at("cases").get<std::size_t>(), c.at("failures").get<std::size_t>(),
                                            c.at("skipped").get<std::size_t>(),
                                            c.at("counterexample").get<std::string>(), c.at("note").get<std::string>()});
      }
    }
    if (j.contains("metrics")) {
      for (const auto& [name, value] : j["metrics"].items()) doc.metrics.push_back(Metric{name, value.get<std::string>()});
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed document: ") + e.what());
  }
}

TriMesh mesh_from_document(const ResultDocument& doc) {
  std::vector<Edge> constrained;
  for (const EdgeReport& e : doc.edges) {
    if (e.constrained) constrained.push_back(e.edge);
  }
  return TriMesh::from_triangles(SiteSet(doc.sites), doc.triangles, constrained);
}

void record_mesh(ResultDocument& doc, const TriMesh& mesh) {
  doc.sites = mesh.sites().points();
  doc.triangles = mesh.triangles();
  doc.edges.clear();
  for (const EdgeRecord& e : mesh.edges()) {
    doc.edges.push_back(EdgeReport{e.edge, e.on_hull(), e.constrained, is_locally_delaunay(mesh, e.edge)});
  }
}

void record_diagram(ResultDocument& doc, const VoronoiDiagram& diagram) {
  const Frame& f = diagram.frame();
  doc.frame = std::array<Rational, 4>{f.x0, f.y0, f.x1, f.y1};
  doc.cells.clear();
  for (const VoronoiCell& c : diagram.cells()) doc.cells.push_back(CellReport{c.site, c.polygon.vertices(), c.unbounded});
}

GeometryReport to_report(const Shape& shape) {
  return std::visit(
      [](const auto& s) -> GeometryReport {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Empty>) {
          return {"empty", {}};
        } else if constexpr (std::is_same_v<T, Point>) {
          return {"point", {s}};
        } else if constexpr (std::is_same_v<T, Segment>) {
          const Segment c = s.canonical();
          return {"segment", {c.a(), c.b()}};
        } else {
          return {"polygon", s.vertices()};
        }
      },
      shape);
}

}  // namespace proxtri::io
