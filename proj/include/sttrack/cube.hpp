#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sttrack {

// A cell of a cubical complex, identified by doubled barycentric
// coordinates: an odd component marks a non-degenerate unit interval,
// an even one a degenerate point. The dimension of the cell is the
// number of odd components. Per-frame cells use 2 components (x2, y2),
// stacked cells 3 (x2, y2, t2).
struct Cube {
  std::array<int32_t, 3> c{0, 0, 0};
  uint8_t rank = 2;  // number of coordinates in use

  static Cube planar(int32_t x2, int32_t y2) { return Cube{{x2, y2, 0}, 2}; }
  static Cube stacked(int32_t x2, int32_t y2, int32_t t2) {
    return Cube{{x2, y2, t2}, 3};
  }

  int32_t x2() const { return c[0]; }
  int32_t y2() const { return c[1]; }
  int32_t t2() const { return c[2]; }

  int dim() const {
    int d = 0;
    for (int i = 0; i < rank; ++i) d += c[i] & 1;
    return d;
  }

  bool operator==(const Cube& o) const { return rank == o.rank && c == o.c; }
};

struct CubeHash {
  std::size_t operator()(const Cube& q) const {
    std::size_t h = q.rank;
    for (int i = 0; i < q.rank; ++i)
      h = h * 1000003u + static_cast<std::size_t>(q.c[i] + 0x40000000);
    return h;
  }
};

// All proper faces of a cell, of every lower dimension. A face replaces
// some nonempty subset of the odd coordinates by c-1 or c+1.
std::vector<Cube> faces(const Cube& cell);

// Endpoint vertices of an edge (dim() == 1).
std::array<Cube, 2> edge_endpoints(const Cube& edge);

// Lifts a planar cell into the stack at temporal doubled coordinate t2.
inline Cube lift(const Cube& planar, int32_t t2) {
  return Cube::stacked(planar.c[0], planar.c[1], t2);
}

}  // namespace sttrack
