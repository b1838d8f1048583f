#include "sttrack/complex.hpp"

namespace sttrack {

namespace {

void insert_with_faces(CubicalComplex& cx, const Cube& cell) {
  if (!cx.cells.insert(cell).second) return;
  for (const auto& f : faces(cell)) cx.cells.insert(f);
}

}  // namespace

CubicalComplex build_pixel_graph(const BinaryImage& image) {
  CubicalComplex cx;
  for (auto [x, y] : image.foreground_points()) {
    cx.cells.insert(Cube::planar(2 * x, 2 * y));
    if (image.in_domain(x + 1, y) && image.foreground(x + 1, y))
      cx.cells.insert(Cube::planar(2 * x + 1, 2 * y));
    if (image.in_domain(x, y + 1) && image.foreground(x, y + 1))
      cx.cells.insert(Cube::planar(2 * x, 2 * y + 1));
  }
  return cx;
}

CubicalComplex build_foreground_complex(const BinaryImage& image) {
  CubicalComplex cx;
  for (auto [x, y] : image.foreground_points())
    insert_with_faces(cx, Cube::planar(2 * x + 1, 2 * y + 1));
  return cx;
}

CubicalComplex build_background_complex(const BinaryImage& image) {
  CubicalComplex cx;
  auto bg = [&](int x, int y) {
    return image.in_domain(x, y) && !image.foreground(x, y);
  };
  for (int y = 0; y < image.height(); ++y)
    for (int x = 0; x < image.width(); ++x) {
      if (!bg(x, y)) continue;
      cx.cells.insert(Cube::planar(2 * x, 2 * y));
      if (bg(x + 1, y)) cx.cells.insert(Cube::planar(2 * x + 1, 2 * y));
      if (bg(x, y + 1)) cx.cells.insert(Cube::planar(2 * x, 2 * y + 1));
      if (bg(x + 1, y) && bg(x, y + 1) && bg(x + 1, y + 1))
        cx.cells.insert(Cube::planar(2 * x + 1, 2 * y + 1));
    }
  return cx;
}

bool is_face_closed(const CubicalComplex& cx) {
  for (const auto& q : cx.cells)
    for (const auto& f : faces(q))
      if (!cx.contains(f)) return false;
  return true;
}

std::optional<Cube> cube_intersection(const Cube& a, const Cube& b) {
  if (a.rank != b.rank) return std::nullopt;
  Cube out;
  out.rank = a.rank;
  for (int i = 0; i < a.rank; ++i) {
    // Interval of a doubled coordinate c: [c-1, c+1] if odd, [c, c].
    int32_t alo = a.c[i] - (a.c[i] & 1), ahi = a.c[i] + (a.c[i] & 1);
    int32_t blo = b.c[i] - (b.c[i] & 1), bhi = b.c[i] + (b.c[i] & 1);
    int32_t lo = std::max(alo, blo), hi = std::min(ahi, bhi);
    if (lo > hi) return std::nullopt;
    out.c[i] = (lo + hi) / 2;
  }
  return out;
}

bool intersections_are_cells(const CubicalComplex& cx) {
  std::vector<Cube> cells(cx.cells.begin(), cx.cells.end());
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      auto meet = cube_intersection(cells[i], cells[j]);
      if (meet && !cx.contains(*meet)) return false;
    }
  return true;
}

}  // namespace sttrack
