#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proxtri/delaunay.hpp"
#include "proxtri/voronoi.hpp"

namespace proxtri::io {

inline constexpr int kSchemaVersion = 1;

enum class Format {
  Document,  // indented JSON
  JsonLike,  // the same JSON on one line
};

struct EdgeReport {
  Edge edge;
  bool hull = false;
  bool constrained = false;
  bool locally_delaunay = false;
  friend bool operator==(const EdgeReport&, const EdgeReport&) = default;
};

struct CellReport {
  SiteIndex site = 0;
  std::vector<Point> loop;
  bool unbounded = false;
  friend bool operator==(const CellReport&, const CellReport&) = default;
};

/// Witness or other geometry: kind is "empty", "point", "segment" or "polygon".
struct GeometryReport {
  std::string kind;
  std::vector<Point> points;
  friend bool operator==(const GeometryReport&, const GeometryReport&) = default;
};

struct QueryReport {
  std::string relation;
  std::string a;
  std::string b;
  bool holds = false;
  std::optional<GeometryReport> witness;
  friend bool operator==(const QueryReport&, const QueryReport&) = default;
};

enum class CheckStatus { Pass, Fail, DegenerateSkip };
std::string_view to_string(CheckStatus s);

struct PropertyReport {
  std::string suite;
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  std::string counterexample;  // first failing case, empty when none
  std::string note;
  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

struct Metric {
  std::string name;
  std::string value;
  friend bool operator==(const Metric&, const Metric&) = default;
};

/// Everything a command reports. Fields a command does not produce stay empty
/// and are omitted from the serialized form.
struct ResultDocument {
  std::string command;
  std::vector<Point> sites;
  std::vector<Triangle> triangles;
  std::vector<EdgeReport> edges;
  std::optional<std::array<Rational, 4>> frame;
  std::vector<CellReport> cells;
  std::vector<std::vector<TriangleId>> regions;
  std::vector<QueryReport> queries;
  std::vector<PropertyReport> checks;
  std::vector<Metric> metrics;
  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

/// JSON text with the schema version embedded. Rationals are exact strings.
std::string serialize(const ResultDocument& doc, Format format = Format::Document);

/// Inverse of serialize for either format. Throws Parse.
ResultDocument parse_document(std::string_view text);

/// Rebuilds the mesh recorded in a document. Throws InvalidMesh, DuplicateSite.
TriMesh mesh_from_document(const ResultDocument& doc);

/// Fills sites, triangles and per-edge verdicts from a mesh.
void record_mesh(ResultDocument& doc, const TriMesh& mesh);
void record_diagram(ResultDocument& doc, const VoronoiDiagram& diagram);
GeometryReport to_report(const Shape& shape);

}  // namespace proxtri::io
