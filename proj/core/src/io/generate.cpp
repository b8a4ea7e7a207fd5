#include "proxtri/io/generate.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>

#include "proxtri/error.hpp"
#include "proxtri/predicates.hpp"

namespace proxtri::io {
namespace {

// std::uniform_int_distribution is implementation-defined; this one is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t below(std::int64_t bound) {
    const auto range = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return static_cast<std::int64_t>(draw % range);
  }

  std::int64_t between(std::int64_t lo, std::int64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

Point milli(std::int64_t x, std::int64_t y) {
  Rational rx(x, 1000), ry(y, 1000);
  rx.canonicalize();
  ry.canonicalize();
  return Point(rx, ry);
}

class Collector {
 public:
  explicit Collector(std::size_t n) : target_(n) {}
  bool add(const Point& p) {
    if (done() || !seen_.insert(p).second) return false;
    points_.push_back(p);
    return true;
  }
  bool done() const { return points_.size() >= target_; }
  std::vector<Point> take() { return std::move(points_); }

 private:
  std::size_t target_;
  std::set<Point> seen_;
  std::vector<Point> points_;
};

}  // namespace

std::optional<Distribution> parse_distribution(std::string_view name) {
  if (name == "uniform") return Distribution::Uniform;
  if (name == "clustered") return Distribution::Clustered;
  if (name == "cocircular") return Distribution::Cocircular;
  if (name == "collinear-heavy") return Distribution::CollinearHeavy;
  return std::nullopt;
}

std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::Uniform: return "uniform";
    case Distribution::Clustered: return "clustered";
    case Distribution::Cocircular: return "cocircular";
    case Distribution::CollinearHeavy: return "collinear-heavy";
  }
  return "uniform";
}

std::vector<Point> generate_sites(std::size_t n, std::uint64_t seed, Distribution distribution) {
  if (n < 3) throw Error(ErrorCode::BadCount, "need at least 3 sites, got " + std::to_string(n));
  Rng rng(seed);
  Collector out(n);

  switch (distribution) {
    case Distribution::Uniform:
      while (!out.done()) out.add(milli(rng.below(1'000'000), rng.below(1'000'000)));
      break;

    case Distribution::Clustered: {
      const std::size_t clusters = std::max<std::size_t>(1, n / 8);
      std::vector<std::array<std::int64_t, 2>> centers;
      for (std::size_t c = 0; c < clusters; ++c) {
        centers.push_back({rng.between(50'000, 950'000), rng.between(50'000, 950'000)});
      }
      while (!out.done()) {
        const auto& center = centers[static_cast<std::size_t>(rng.below(static_cast<std::int64_t>(clusters)))];
        // Sum of four uniforms: a cheap bell-shaped offset within +-20 units.
        std::int64_t dx = 0, dy = 0;
        for (int k = 0; k < 4; ++k) {
          dx += rng.between(-5'000, 5'000);
          dy += rng.between(-5'000, 5'000);
        }
        out.add(milli(center[0] + dx, center[1] + dy));
      }
      break;
    }

    case Distribution::Cocircular: {
      std::vector<std::array<std::int64_t, 2>> lattice{{5, 0}, {4, 3}, {3, 4}, {0, 5}, {-3, 4}, {-4, 3},
                                                       {-5, 0}, {-4, -3}, {-3, -4}, {0, -5}, {3, -4}, {4, -3}};
      for (std::size_t i = lattice.size(); i > 1; --i) {
        std::swap(lattice[i - 1], lattice[static_cast<std::size_t>(rng.below(static_cast<std::int64_t>(i)))]);
      }
      const std::int64_t scale = rng.between(1, 10);
      const std::int64_t cx = rng.between(100, 900);
      const std::int64_t cy = rng.between(100, 900);
      const std::size_t on_circle = std::min<std::size_t>(lattice.size(), std::max<std::size_t>(4, n / 2));
      for (std::size_t i = 0; i < on_circle && !out.done(); ++i) {
        out.add(Point(cx + scale * lattice[i][0], cy + scale * lattice[i][1]));
      }
      const Rational radius_sq = 25 * scale * scale;
      const Point center(cx, cy);
      while (!out.done()) {
        Point p = milli(rng.below(1'000'000), rng.below(1'000'000));
        if (squared_distance(p, center) != radius_sq) out.add(p);
      }
      break;
    }

    case Distribution::CollinearHeavy: {
      // Lines y = c0, x = c1 and y = x + c2 on the integer grid.
      const std::int64_t c0 = rng.between(0, 100);
      const std::int64_t c1 = rng.between(0, 100);
      const std::int64_t c2 = rng.between(-50, 50);
      std::size_t line = 0;
      while (!out.done()) {
        const std::int64_t t = rng.between(0, 100);
        switch (line % 3) {
          case 0: out.add(Point(t, c0)); break;
          case 1: out.add(Point(c1, t)); break;
          default: out.add(Point(t, t + c2)); break;
        }
        ++line;
      }
      break;
    }
  }
  std::vector<Point> points = out.take();
  // Redraw the last site until the set spans the plane (rare for small n).
  auto all_collinear = [&] {
    for (std::size_t i = 2; i < points.size(); ++i) {
      if (orientation(points[0], points[1], points[i]) != Orientation::Collinear) return false;
    }
    return true;
  };
  while (all_collinear()) {
    Point candidate(rng.between(0, 100), rng.between(0, 100));
    if (std::find(points.begin(), points.end(), candidate) == points.end()) points.back() = candidate;
  }
  return points;
}

}  // namespace proxtri::io
