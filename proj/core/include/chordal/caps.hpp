#pragma once

#include <string_view>

namespace chordal {

/// Vertex-count limits for the exponential solvers and the circular-order
/// enumeration.
struct Caps {
  int treewidth = 18;
  int hadwiger = 14;
  int hajos = 12;
  int enumeration = 10;
};

/// Parses "treewidth=20,hadwiger=15" style overrides on top of `base`.
/// Throws Error(kInvalidParameter) for unknown keys or non-positive values.
Caps parse_caps(std::string_view text, Caps base = {});

/// Applies CHORDAL_CAPS from the environment if set.
Caps caps_from_env(Caps base = {});

}  // namespace chordal
