#pragma once

#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "sttrack/complex.hpp"
#include "sttrack/cube.hpp"

namespace sttrack {

// Frames lifted to time layers: frame i (1-based) sits at doubled
// temporal coordinate 2i; a cell present in frames i and i+1 spawns a
// temporal cell at 2i+1. Only the 1-skeleton is kept, so temporal cells
// are edges over shared vertices.
struct StackedComplex {
  std::unordered_set<Cube, CubeHash> cells;
  int frame_count = 0;
};

StackedComplex stack(const std::vector<CubicalComplex>& per_frame);

enum class CellKind { Spatial, Temporal };

// A cell is spatial iff its time barycenter is an integer.
inline CellKind classify(const Cube& cell) {
  return (cell.t2() & 1) ? CellKind::Temporal : CellKind::Spatial;
}

struct OrderedCell {
  int index = 0;  // 1-based position in the total order
  Cube cube;
  CellKind kind = CellKind::Spatial;
  int dim = 0;
};

// A level of the spatiotemporal filtration: the spatial complex Q_j or
// the temporal slab Q_{j,j+1}. Cells of the level occupy the 1-based
// index range [first, last]; an empty level has first > last.
struct FiltrationLevel {
  bool temporal = false;
  int frame = 0;  // j for Spatial(j) and for Temporal(j, j+1)
  int first = 0;
  int last = -1;
};

// The spatiotemporal filtration Q1, Q2, Q12, Q3, Q23, ..., Ql, Q(l-1)l
// with a total ordering of its 0- and 1-cells. Within a level, cells are
// sorted by dimension, then lexicographically by (t2, y2, x2), which
// keeps every cell after its faces and makes the order a deterministic
// function of the input.
class Filtration {
 public:
  static Filtration build(const StackedComplex& stacked);

  int size() const { return static_cast<int>(order_.size()); }
  int frame_count() const { return frame_count_; }
  const OrderedCell& cell(int index) const { return order_[index - 1]; }
  const std::vector<OrderedCell>& order() const { return order_; }
  const std::vector<FiltrationLevel>& levels() const { return levels_; }

  int index_of(const Cube& cube) const;  // 0 when absent
  bool is_vertex(int index) const { return cell(index).dim == 0; }
  bool is_temporal(int index) const {
    return cell(index).kind == CellKind::Temporal;
  }

  // Vertex indices of an edge's endpoints.
  std::pair<int, int> endpoints(int edge_index) const;

  int frame_of_vertex(int index) const { return cell(index).cube.t2() / 2; }

  // Frames a cell belongs to: {j} for a spatial cell at t2 = 2j,
  // {j, j+1} for a temporal cell at t2 = 2j+1.
  std::pair<int, int> frames_of(int index) const;

  // Slab index i of a temporal edge (the cell lives in Q_{i,i+1});
  // 0 for spatial cells.
  int slab_of(int index) const {
    return is_temporal(index) ? cell(index).cube.t2() / 2 : 0;
  }

  // Edges incident to a vertex, as (edge index, other endpoint index).
  const std::vector<std::pair<int, int>>& incident(int vertex_index) const {
    return adjacency_[vertex_index];
  }

  // One cell per line: "index kind dim (x2,y2,t2)" in filtration order.
  void dump(std::ostream& out) const;

 private:
  std::vector<OrderedCell> order_;
  std::vector<FiltrationLevel> levels_;
  std::unordered_map<Cube, int, CubeHash> index_;
  std::vector<std::pair<int, int>> endpoints_;            // per cell, 1-based
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  int frame_count_ = 0;
};

}  // namespace sttrack
