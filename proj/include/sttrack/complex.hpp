#pragma once

#include <optional>
#include <unordered_set>

#include "sttrack/cube.hpp"
#include "sttrack/image.hpp"

namespace sttrack {

// A finite cubical complex: a set of cells closed under faces whose
// pairwise intersections are again cells of the set.
struct CubicalComplex {
  std::unordered_set<Cube, CubeHash> cells;

  bool contains(const Cube& q) const { return cells.count(q) != 0; }
  std::size_t count_dim(int d) const {
    std::size_t n = 0;
    for (const auto& q : cells) n += (q.dim() == d);
    return n;
  }
};

// One vertex per foreground pixel at (2x, 2y), one edge per 4-adjacent
// foreground pair; no 2-cells. This is the graph view of a frame.
CubicalComplex build_pixel_graph(const BinaryImage& image);

// Full cubical complex of the foreground: one closed unit square per
// pixel plus all its faces. Cells live on the corner lattice, shifted by
// half a unit from the pixel grid: the pixel square centered at (x, y)
// spans [x-1/2, x+1/2] x [y-1/2, y+1/2], so the cell for pixel (x, y)
// carries doubled coordinates (2x+1, 2y+1) and its corner vertices are
// even points (2x, 2y) .. (2x+2, 2y+2). Squares of 8-adjacent pixels
// share cells.
CubicalComplex build_foreground_complex(const BinaryImage& image);

// Background complex on the pixel grid itself: one vertex per point of
// D \ B at (2x, 2y), one edge per 4-connected pair, one square per four
// points forming a unit square.
CubicalComplex build_background_complex(const BinaryImage& image);

// Validation helpers (used by tests).
bool is_face_closed(const CubicalComplex& cx);
bool intersections_are_cells(const CubicalComplex& cx);

// Intersection of two cubes as a cube, if nonempty.
std::optional<Cube> cube_intersection(const Cube& a, const Cube& b);

}  // namespace sttrack
