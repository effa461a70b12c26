#pragma once

#include <string>

#include "mlt/geometry.hpp"

namespace mlt {

struct RenderedTiling {
  std::string svg;
  std::size_t translates = 0;
};

// SVG 1.1 drawing of every translate P + l meeting the patch. Fills are
// semi-transparent so overlap depth reads as darkness. Output is a pure
// function of the inputs.
RenderedTiling render_svg(const ConvexPolygon& p, const Lattice2& lattice, const Rect& patch);

}  // namespace mlt
