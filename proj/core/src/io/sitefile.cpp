#include "proxtri/io/sitefile.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "proxtri/error.hpp"

namespace proxtri::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

// Calls on_record(fields, line_number) for every data line.
template <typename F>
void for_each_record(std::string_view text, std::string_view source, bool allow_header, F&& on_record) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool first_content = true;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (allow_header && first_content && line.starts_with("proxtri-sites")) {
      if (line != kSiteFileHeader) {
        throw Error(ErrorCode::Parse, where(source, line_no) + ": unsupported header '" + std::string(line) + "'");
      }
      first_content = false;
      continue;
    }
    first_content = false;
    on_record(fields(line), line_no);
  }
}

Rational coordinate(std::string_view token, std::string_view source, std::size_t line) {
  auto value = try_parse_rational(token);
  if (!value) {
    throw Error(ErrorCode::Parse,
                where(source, line) + ": '" + std::string(token) + "' is not a decimal or p/q literal");
  }
  return *value;
}

}  // namespace

std::vector<Point> parse_sites(std::string_view text, std::string_view source) {
  std::vector<Point> points;
  std::map<Point, std::size_t> first_line;
  for_each_record(text, source, true, [&](const std::vector<std::string_view>& f, std::size_t line) {
    if (f.size() != 2) {
      throw Error(ErrorCode::Parse,
                  where(source, line) + ": expected 2 coordinates, found " + std::to_string(f.size()));
    }
    Point p(coordinate(f[0], source, line), coordinate(f[1], source, line));
    auto [it, inserted] = first_line.emplace(p, line);
    if (!inserted) {
      std::ostringstream msg;
      msg << where(source, line) << ": site " << p << " repeats line " << it->second;
      throw Error(ErrorCode::DuplicateSite, msg.str());
    }
    points.push_back(std::move(p));
  });
  return points;
}

std::string format_sites(const std::vector<Point>& points) {
  std::string out(kSiteFileHeader);
  out += '\n';
  for (const Point& p : points) {
    out += to_exact_string(p.x());
    out += ' ';
    out += to_exact_string(p.y());
    out += '\n';
  }
  return out;
}

std::vector<Segment> parse_constraints(std::string_view text, std::string_view source) {
  std::vector<Segment> segments;
  for_each_record(text, source, false, [&](const std::vector<std::string_view>& f, std::size_t line) {
    if (f.size() != 4) {
      throw Error(ErrorCode::Parse,
                  where(source, line) + ": expected 4 coordinates, found " + std::to_string(f.size()));
    }
    Point a(coordinate(f[0], source, line), coordinate(f[1], source, line));
    Point b(coordinate(f[2], source, line), coordinate(f[3], source, line));
    if (a == b) throw Error(ErrorCode::Parse, where(source, line) + ": zero-length constraint");
    segments.emplace_back(std::move(a), std::move(b));
  });
  return segments;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "error reading '" + path.string() + "'");
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::Io, "error writing '" + path.string() + "'");
}

}  // namespace proxtri::io
