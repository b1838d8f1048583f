#include "sttrack/stacking.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sttrack {

StackedComplex stack(const std::vector<CubicalComplex>& per_frame) {
  StackedComplex out;
  out.frame_count = static_cast<int>(per_frame.size());
  for (int i = 1; i <= out.frame_count; ++i)
    for (const auto& q : per_frame[i - 1].cells)
      if (q.dim() <= 1) out.cells.insert(lift(q, 2 * i));
  // Temporal edges over vertices shared by consecutive frames. Temporal
  // squares over shared edges are excluded by the 1-skeleton restriction.
  for (int i = 1; i < out.frame_count; ++i)
    for (const auto& q : per_frame[i - 1].cells)
      if (q.dim() == 0 && per_frame[i].contains(q))
        out.cells.insert(lift(q, 2 * i + 1));
  return out;
}

Filtration Filtration::build(const StackedComplex& stacked) {
  Filtration filt;
  filt.frame_count_ = stacked.frame_count;
  int ell = stacked.frame_count;

  std::vector<std::vector<Cube>> spatial(ell + 1), temporal(ell + 1);
  for (const auto& q : stacked.cells) {
    if (classify(q) == CellKind::Spatial)
      spatial[q.t2() / 2].push_back(q);
    else
      temporal[q.t2() / 2].push_back(q);
  }

  auto emit = [&](std::vector<Cube>& cells, bool is_temporal, int frame) {
    std::sort(cells.begin(), cells.end(), [](const Cube& a, const Cube& b) {
      auto key = [](const Cube& q) {
        return std::array<int32_t, 4>{q.dim(), q.t2(), q.y2(), q.x2()};
      };
      return key(a) < key(b);
    });
    FiltrationLevel level;
    level.temporal = is_temporal;
    level.frame = frame;
    level.first = static_cast<int>(filt.order_.size()) + 1;
    for (const auto& q : cells) {
      OrderedCell oc;
      oc.index = static_cast<int>(filt.order_.size()) + 1;
      oc.cube = q;
      oc.kind = is_temporal ? CellKind::Temporal : CellKind::Spatial;
      oc.dim = q.dim();
      filt.index_.emplace(q, oc.index);
      filt.order_.push_back(oc);
    }
    level.last = static_cast<int>(filt.order_.size());
    filt.levels_.push_back(level);
  };

  if (ell >= 1) emit(spatial[1], false, 1);
  for (int j = 2; j <= ell; ++j) {
    emit(spatial[j], false, j);
    emit(temporal[j - 1], true, j - 1);
  }

  int m = filt.size();
  filt.endpoints_.assign(static_cast<std::size_t>(m) + 1, {0, 0});
  filt.adjacency_.assign(static_cast<std::size_t>(m) + 1, {});
  for (const auto& oc : filt.order_) {
    if (oc.dim != 1) continue;
    auto ends = edge_endpoints(oc.cube);
    auto a = filt.index_.find(ends[0]);
    auto b = filt.index_.find(ends[1]);
    if (a == filt.index_.end() || b == filt.index_.end())
      throw std::logic_error("stacked complex is not face closed");
    filt.endpoints_[oc.index] = {a->second, b->second};
    filt.adjacency_[a->second].emplace_back(oc.index, b->second);
    filt.adjacency_[b->second].emplace_back(oc.index, a->second);
  }
  return filt;
}

int Filtration::index_of(const Cube& cube) const {
  auto it = index_.find(cube);
  return it == index_.end() ? 0 : it->second;
}

std::pair<int, int> Filtration::endpoints(int edge_index) const {
  if (cell(edge_index).dim != 1)
    throw std::invalid_argument("cell is not an edge");
  return endpoints_[edge_index];
}

std::pair<int, int> Filtration::frames_of(int index) const {
  const Cube& q = cell(index).cube;
  int j = q.t2() / 2;
  return (q.t2() & 1) ? std::pair<int, int>{j, j + 1}
                      : std::pair<int, int>{j, j};
}

void Filtration::dump(std::ostream& out) const {
  for (const auto& oc : order_) {
    out << oc.index << ' '
        << (oc.kind == CellKind::Temporal ? "temporal" : "spatial") << ' '
        << oc.dim << " (" << oc.cube.x2() << ',' << oc.cube.y2() << ','
        << oc.cube.t2() << ")\n";
  }
}

}  // namespace sttrack
