#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "proxtri/point.hpp"

namespace proxtri::io {

enum class Distribution { Uniform, Clustered, Cocircular, CollinearHeavy };

std::optional<Distribution> parse_distribution(std::string_view name);
std::string_view to_string(Distribution d);

/// Deterministic site generator: the output depends only on (n, seed,
/// distribution), on every platform. Coordinates are short decimals.
///   uniform          points on a 0.001 grid in [0, 1000)^2
///   clustered        a few tight clusters
///   cocircular       at least four (up to twelve) lattice points of a
///                    scaled x^2 + y^2 = 25 circle, the rest uniform
///   collinear-heavy  integer points on two or three lines
/// Throws BadCount when n < 3.
std::vector<Point> generate_sites(std::size_t n, std::uint64_t seed, Distribution distribution);

}  // namespace proxtri::io
