#include <algorithm>
#include <sstream>

#include "sttrack/pipeline.hpp"

namespace sttrack {

std::string render_barcode_svg(const Barcode& bc, const Filtration& filt) {
  constexpr int kScale = 8;     // horizontal pixels per filtration index
  constexpr int kRow = 10;      // vertical pixels per bar
  constexpr int kMargin = 12;
  const int m = filt.size();
  const int width = 2 * kMargin + (m + 1) * kScale;
  const int height =
      2 * kMargin + kRow * std::max<int>(1, static_cast<int>(bc.bars.size()));

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  svg << "  <rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  // One tick per filtration level boundary.
  for (const auto& level : filt.levels()) {
    if (level.first > level.last) continue;
    int x = kMargin + level.first * kScale;
    svg << "  <line x1=\"" << x << "\" y1=\"" << kMargin << "\" x2=\"" << x
        << "\" y2=\"" << height - kMargin << "\" stroke=\""
        << (level.temporal ? "#c0c0c0" : "#808080")
        << "\" stroke-dasharray=\"2,3\"/>\n";
  }
  int row = 0;
  for (const auto& bar : bc.bars) {
    int x = kMargin + bar.birth * kScale;
    int w = std::max(1, (bar.death - bar.birth) * kScale);
    int y = kMargin + row * kRow + 2;
    svg << "  <rect class=\"bar\" x=\"" << x << "\" y=\"" << y << "\" width=\""
        << w << "\" height=\"" << kRow - 4 << "\" fill=\"#20609f\"/>\n";
    ++row;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace sttrack
