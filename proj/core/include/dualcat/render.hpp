#pragma once

#include <string>

#include "dualcat/matching.hpp"

namespace dualcat {

// Text picture of a matching: codomain on top, domain at the bottom, caps
// hanging from the top line, cups arching over the bottom line, through
// strands interpolated between their endpoint columns. Arrows follow the
// orientation of the letters: unmarked strands point up, marked ones down,
// and every arc runs from its opening end on the left to its closing end.
std::string render_ascii(const Matching& mt);

// Standalone SVG of the same picture with evenly spaced columns and
// semicircular arcs.
std::string render_svg(const Matching& mt);

}  // namespace dualcat
