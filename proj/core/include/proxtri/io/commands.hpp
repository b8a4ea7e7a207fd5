#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "proxtri/error.hpp"
#include "proxtri/io/document.hpp"
#include "proxtri/voronoi.hpp"

namespace proxtri::io {

struct GlobalOptions {
  std::optional<Frame> frame;
  std::uint64_t seed = 0;
  Format format = Format::Document;
  bool quiet = false;
};

/// Output sink: a file when `out` is set, the given stream otherwise.
struct Output {
  std::optional<std::filesystem::path> path;
  std::ostream* stream = nullptr;
  void write(const std::string& text) const;
};

/// Parses "x0,y0,x1,y1" with x0 < x1 and y0 < y1. Throws Usage.
Frame parse_frame(const std::string& text);

/// Either a site file or a result document holding a mesh.
struct Input {
  SiteSet sites;
  std::optional<TriMesh> mesh;
};
Input load_input(const std::filesystem::path& path);

/// Command bodies. Each returns the process exit status (0 success, 1
/// property failure) and throws Error for everything else.
int run_gen(const GlobalOptions& g, std::size_t n, const std::string& distribution, const Output& out);
int run_triangulate(const GlobalOptions& g, const std::filesystem::path& in,
                    const std::optional<std::filesystem::path>& constraints, const Output& out);
int run_check(const GlobalOptions& g, const std::filesystem::path& in, const std::string& suite, const Output& out);
int run_render(const GlobalOptions& g, const std::filesystem::path& in, const std::string& what, const Output& out);
int run_query(const GlobalOptions& g, const std::filesystem::path& in, const std::string& relation,
              const std::string& a, const std::string& b, const Output& out);

/// Exit status for a library error: 2 for usage, parse and I/O problems,
/// 1 for geometry errors.
int exit_code_for(const Error& e);

}  // namespace proxtri::io
