#include "mlt/svg.hpp"

#include "mlt/coverage.hpp"

namespace mlt {

namespace {

constexpr int kDigits = 6;
constexpr int kPixelsPerUnit = 100;

std::string num(const Rational& r) { return to_decimal(r, kDigits); }

}  // namespace

RenderedTiling render_svg(const ConvexPolygon& p, const Lattice2& lattice, const Rect& patch) {
  const TranslateSet set = collect_translates(p, lattice, patch);
  const Rational width = patch.xmax - patch.xmin;
  const Rational height = patch.ymax - patch.ymin;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width * kPixelsPerUnit) +
       "\" height=\"" + num(height * kPixelsPerUnit) + "\" viewBox=\"" + num(patch.xmin) + " " + num(-patch.ymax) +
       " " + num(width) + " " + num(height) + "\">\n";
  s += "<clipPath id=\"patch\"><rect x=\"" + num(patch.xmin) + "\" y=\"" + num(-patch.ymax) + "\" width=\"" +
       num(width) + "\" height=\"" + num(height) + "\"/></clipPath>\n";
  s += "<g clip-path=\"url(#patch)\" fill=\"#1f5fa8\" fill-opacity=\"0.18\" stroke=\"#102a4c\" "
       "stroke-width=\"0.01\" stroke-linejoin=\"round\">\n";
  for (const auto& off : set.offsets) {
    const Vec2 shift = lattice.from_coords(Vec2{off.a, off.b});
    s += "<polygon points=\"";
    bool first = true;
    for (const auto& v : p.vertices()) {
      const Point2 w = v + shift;
      if (!first) s += " ";
      // SVG's y axis points down.
      s += num(w.x) + "," + num(-w.y);
      first = false;
    }
    s += "\"/>\n";
  }
  s += "</g>\n</svg>\n";
  return {std::move(s), set.offsets.size()};
}

}  // namespace mlt
