#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "proxtri/delaunay.hpp"

namespace proxtri::io {

/// First line of every written site file. Optional on input.
inline constexpr std::string_view kSiteFileHeader = "proxtri-sites 1";

/// One site per line as two decimal (or exact p/q) literals; '#' starts a comment line;
/// blank lines are ignored. Throws Parse (with the line number) for bad
/// records and DuplicateSite naming both lines.
std::vector<Point> parse_sites(std::string_view text, std::string_view source = "<input>");

/// Header line followed by one "x y" record per site, exact decimals or p/q.
std::string format_sites(const std::vector<Point>& points);

/// One constraint per line as four literals "x1 y1 x2 y2", same syntax as sites.
std::vector<Segment> parse_constraints(std::string_view text, std::string_view source = "<input>");

/// Whole-file helpers. Throw Io.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace proxtri::io
