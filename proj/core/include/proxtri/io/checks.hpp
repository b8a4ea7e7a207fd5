#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "proxtri/io/document.hpp"

namespace proxtri::io {

enum class Suite { Delaunay, Dual, Lemma2, TheoremEquivalence, Regions, Leader, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s);

struct CheckOutcome {
  std::vector<PropertyReport> properties;
  std::vector<Metric> metrics;
  std::vector<std::vector<TriangleId>> regions;  // filled by the regions suite

  /// No property failed. Degenerate skips do not count as failures.
  bool all_passed() const;
};

/// Runs one suite (or all, in a fixed order) against the Delaunay mesh of the
/// sites and its Voronoi dual. Each property reports pass, fail with the
/// first counterexample, or degenerate-skip when every failing case is a
/// cocircular degeneracy the property does not speak to.
CheckOutcome run_checks(const TriMesh& mesh, Suite suite, const std::optional<Frame>& frame = std::nullopt);

}  // namespace proxtri::io
