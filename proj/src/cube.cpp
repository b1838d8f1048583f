#include "sttrack/cube.hpp"

#include <stdexcept>
#include <unordered_set>

namespace sttrack {

std::vector<Cube> faces(const Cube& cell) {
  std::vector<Cube> out;
  std::vector<Cube> frontier{cell};
  std::unordered_set<Cube, CubeHash> seen;
  while (!frontier.empty()) {
    std::vector<Cube> next;
    for (const auto& q : frontier) {
      for (int i = 0; i < q.rank; ++i) {
        if ((q.c[i] & 1) == 0) continue;
        for (int delta : {-1, +1}) {
          Cube f = q;
          f.c[i] += delta;
          if (seen.insert(f).second) {
            out.push_back(f);
            next.push_back(f);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::array<Cube, 2> edge_endpoints(const Cube& edge) {
  if (edge.dim() != 1) throw std::invalid_argument("not an edge");
  for (int i = 0; i < edge.rank; ++i) {
    if (edge.c[i] & 1) {
      Cube a = edge, b = edge;
      a.c[i] -= 1;
      b.c[i] += 1;
      return {a, b};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace sttrack
