#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chordal {

enum class ErrorKind {
  kInvalidParameter,
  kInvalidGraph,
  kTooLargeInstance,
  kViolatedAxiom,
  kDanglingId,
  kDisconnectedGraph,
  kNotAPermutation,
  kDegenerateGeometry,
  kNoInteriorFace,
  kPointOnChord,
  kNotDominant,
  kRadiusTooSmall,
  kInternalContractViolation,
  kInvalidInputDecomposition,
  kTooSmall,
  kNotATree,
  kDegreeExceeded,
  kUnknownEdge,
  kDuplicateCoordinate,
  kParseError,
  kIoError,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; `kind()` tells callers which contract
// was broken without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace chordal
