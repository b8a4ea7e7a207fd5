#include "proxtri/error.hpp"

namespace proxtri {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::CollinearInput: return "CollinearInput";
    case ErrorCode::NotCCW: return "NotCCW";
    case ErrorCode::NonConvexInput: return "NonConvexInput";
    case ErrorCode::TooFewSites: return "TooFewSites";
    case ErrorCode::AllCollinear: return "AllCollinear";
    case ErrorCode::DuplicateSite: return "DuplicateSite";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::CrossingConstraints: return "CrossingConstraints";
    case ErrorCode::ConstraintThroughSite: return "ConstraintThroughSite";
    case ErrorCode::UnknownConstraintEndpoint: return "UnknownConstraintEndpoint";
    case ErrorCode::InvalidMesh: return "InvalidMesh";
    case ErrorCode::FrameTooSmall: return "FrameTooSmall";
    case ErrorCode::DegenerateIntersection: return "DegenerateIntersection";
    case ErrorCode::UnionHasHole: return "UnionHasHole";
    case ErrorCode::MixedMeshes: return "MixedMeshes";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::BadCount: return "BadCount";
    case ErrorCode::UnknownSelector: return "UnknownSelector";
    case ErrorCode::Usage: return "UsageError";
  }
  return "Unknown";
}

}  // namespace proxtri
