#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace proxtri {

enum class ErrorCode {
  // geometry-core
  InvalidGeometry,
  CollinearInput,
  NotCCW,
  NonConvexInput,
  // delaunay
  TooFewSites,
  AllCollinear,
  DuplicateSite,
  IndexOutOfRange,
  UnknownEdge,
  CrossingConstraints,
  ConstraintThroughSite,
  UnknownConstraintEndpoint,
  InvalidMesh,
  // voronoi
  FrameTooSmall,
  DegenerateIntersection,
  // regions
  UnionHasHole,
  MixedMeshes,
  // cli-io
  Parse,
  Io,
  BadCount,
  UnknownSelector,
  Usage,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code is stable and is what the
/// command-line layer maps onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace proxtri
