#pragma once

#include <string>

namespace modinv {

// Renders the fundamental-domain figure as a standalone SVG document:
// 800x600 viewport over Re in [-3/2, 3/2], Im in [0, 4.5], with the unit
// arc, the walls Re = +-1/2, axis ticks at +-sqrt(2)/2 and +-sqrt(3)/3, and
// one labeled marker per table entry (entries above the viewport are pinned
// to the top edge and annotated as off scale).
std::string render_figure_svg();

} // namespace modinv
