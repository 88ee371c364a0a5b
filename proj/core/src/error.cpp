#include "chordal/error.hpp"

namespace chordal {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kInvalidGraph: return "invalid-graph";
    case ErrorKind::kTooLargeInstance: return "too-large-instance";
    case ErrorKind::kViolatedAxiom: return "violated-axiom";
    case ErrorKind::kDanglingId: return "dangling-id";
    case ErrorKind::kDisconnectedGraph: return "disconnected-graph";
    case ErrorKind::kNotAPermutation: return "not-a-permutation";
    case ErrorKind::kDegenerateGeometry: return "degenerate-geometry";
    case ErrorKind::kNoInteriorFace: return "no-interior-face";
    case ErrorKind::kPointOnChord: return "point-on-chord";
    case ErrorKind::kNotDominant: return "not-dominant";
    case ErrorKind::kRadiusTooSmall: return "radius-too-small";
    case ErrorKind::kInternalContractViolation: return "internal-contract-violation";
    case ErrorKind::kInvalidInputDecomposition: return "invalid-input-decomposition";
    case ErrorKind::kTooSmall: return "too-small";
    case ErrorKind::kNotATree: return "not-a-tree";
    case ErrorKind::kDegreeExceeded: return "degree-exceeds-3";
    case ErrorKind::kUnknownEdge: return "unknown-edge";
    case ErrorKind::kDuplicateCoordinate: return "duplicate-coordinate";
    case ErrorKind::kParseError: return "parse-error";
    case ErrorKind::kIoError: return "io-error";
  }
  return "unknown";
}

}  // namespace chordal
