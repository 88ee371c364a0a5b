#pragma once

#include <optional>

#include "chordal/caps.hpp"
#include "chordal/graph.hpp"
#include "chordal/minor.hpp"

namespace chordal {

struct HadwigerResult {
  int value = 0;
  /// Model of K_value; pattern vertices are 0..value-1.
  MinorCertificate certificate;
};

/// Searches for a K_t minor by contraction/deletion branching with safe
/// reductions (low-degree deletion, degree-2 suppression) and memoisation of
/// failed states. Throws Error(kTooLargeInstance) above `cap` vertices.
std::optional<MinorCertificate> find_clique_minor(const Graph& g, int t, int cap = Caps{}.hadwiger);

/// Largest t with a K_t minor, with its model.
HadwigerResult hadwiger_exact(const Graph& g, int cap = Caps{}.hadwiger);

}  // namespace chordal
