#pragma once

#include <string>

#include "lcone/rectangle.hpp"
#include "lcone/wiring.hpp"

namespace lcone {

/// Self-contained SVG of the wiring diagram with chamber labels.
std::string svg_chamber_diagram(const ReducedWord& word);

/// Loose text rendering: one line per strand position, X at crossings.
std::string ascii_chamber_diagram(const ReducedWord& word);

/// Self-contained SVG of the glued diagram: diamond cells with labels and
/// multiplicities, rectangle outlines, and the dashed central line.
std::string svg_rectangle_diagram(const RectangleDiagram& d);

/// Diagonal rows in reading order with labels and multiplicities.
std::string ascii_rectangle_diagram(const RectangleDiagram& d);

/// Self-contained SVG of the square pseudoline arrangement.
std::string svg_arrangement(const Arrangement& arr);

} // namespace lcone
