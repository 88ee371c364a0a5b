#pragma once

#include <filesystem>
#include <string>

#include "chordal/drawing.hpp"
#include "chordal/serialize.hpp"

namespace chordal {

/// Circle, one <line> per chord, a marker per crossing, one <circle> per vertex.
std::string to_svg(const CircularDrawing& d);
/// Segments as <line>; linear drawings draw upper semicircles as <path> arcs.
std::string to_svg(const StraightLineDrawing& d);
std::string to_svg(const Drawing& d);

/// Throws Error(kIoError).
void export_svg(const Drawing& d, const std::filesystem::path& path);

}  // namespace chordal
