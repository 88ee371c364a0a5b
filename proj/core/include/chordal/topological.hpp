#pragma once

#include <optional>

#include "chordal/caps.hpp"
#include "chordal/graph.hpp"
#include "chordal/minor.hpp"

namespace chordal {

/// Searches for a subdivision of `h` in `g`: branch vertices are assigned by
/// backtracking (degree-filtered, injective), then each pattern edge is routed
/// along a simple path through unused vertices. Throws
/// Error(kTooLargeInstance) if g has more than `cap` vertices.
std::optional<TopologicalMinorCertificate> find_topological_minor(const Graph& g, const Graph& h,
                                                                  int cap = Caps{}.hajos);

struct HajosResult {
  int value = 0;
  /// Subdivision of K_value; pattern vertices are 0..value-1.
  TopologicalMinorCertificate certificate;
};

/// Largest t with a K_t topological minor, with its certificate.
HajosResult hajos_exact(const Graph& g, int cap = Caps{}.hajos);

}  // namespace chordal
