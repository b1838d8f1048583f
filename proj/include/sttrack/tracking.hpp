#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sttrack/chain.hpp"
#include "sttrack/stacking.hpp"

namespace sttrack {

// A consolidated bar: the component born at `birth` (a vertex index) is
// last extended at `death` (the birth itself, or a TE edge index).
struct Bar {
  int birth = 0;
  int death = 0;
  int rep = 0;  // representative vertex, equal to birth

  bool operator==(const Bar&) const = default;
};

struct Barcode {
  std::vector<Bar> bars;  // sorted by birth, one per birth

  const Bar* find(int birth) const {
    for (const auto& b : bars)
      if (b.birth == birth) return &b;
    return nullptr;
  }
};

// An edge recorded by the algorithm when it joins two differently
// represented components. j carries the newer representative k, jp the
// older one kp (kp < k).
struct TeEdge {
  int edge = 0;
  int j = 0, jp = 0;
  int k = 0, kp = 0;
  bool removed_k = false;  // whether k left the survivor set here
};

// A dangling-survivor repair: at TE edge `edge`, vertex `vertex` still
// mapped to the removed representative after the update sweep and was
// remapped by a shortest time-monotone path search.
struct RemediationEvent {
  int edge = 0;
  int vertex = 0;
  bool repaired = false;
};

struct TrackState {
  std::vector<int> f;           // per vertex index; 0 for non-vertices
  std::vector<EdgeChain> phi;   // per vertex index
  std::set<int> survivors;      // H
  std::vector<TeEdge> te;       // in index order
  std::vector<std::pair<int, int>> raw_bars;  // (birth, death) events
  std::vector<RemediationEvent> remediation;
};

// Runs the tracking pass over the filtration: vertices are born into the
// survivor set; an edge whose endpoints carry different representatives
// is recorded in TE, may retire the newer representative, and triggers a
// staged update sweep of the vertices of the newest involved frame.
TrackState run_algorithm1(const Filtration& filt);

// One bar per birth, death = the maximum death recorded for that birth.
Barcode consolidate(const TrackState& state);

struct PathCheck {
  bool valid = false;
  int v = 0, w = 0;  // endpoint vertex indices; 0 for the empty chain
  std::string reason;
};

// Valid iff the chain is a simple vertex-to-vertex path and every
// temporal slab contributes at most one edge. The empty chain is valid
// with coincident unspecified endpoints.
PathCheck is_spatiotemporal_path(const EdgeChain& chain,
                                 const Filtration& filt);

// Homological characterization: the closure of the given cells is
// connected and acyclic with a two-vertex boundary, and its intersection
// with every temporal slab is empty or connected and acyclic.
bool is_homological_0path(const std::vector<Cube>& cells,
                          const Filtration& filt);

// Standard persistence oracle: union-find over the same total order,
// elder rule at merges, survivors die at m.
Barcode classical_0barcode(const Filtration& filt);

// Minimum-index vertex reachable from v when spatial edges are
// bidirectional and temporal edges only lead from the newer frame to the
// older one. This is exactly the oldest spatiotemporally connected
// vertex.
int oldest_connected_oracle(int v, const Filtration& filt);

// Reachability set of the same relation (vertex indices, including v).
std::vector<int> monotone_reachable(int v, const Filtration& filt);

// Ancestry structure derived from TE: vertex -> (parent vertex, via edge).
struct TrackingTree {
  std::map<int, std::pair<int, int>> parent;
};

TrackingTree build_tracking_tree(const TrackState& state,
                                 const Filtration& filt);

struct Lineage {
  int vertex = 0;
  int birth_vertex = 0;
  int birth_frame = 0;
  // The spatiotemporal path from the vertex to its birth vertex, as
  // (frame, x2, y2) stops; empty when the vertex is its own birth.
  std::vector<std::array<int, 3>> walk;
  std::vector<int> ancestors;  // strict ancestors in the tracking tree
};

Lineage track(int v, const TrackState& state, const TrackingTree& tree,
              const Filtration& filt);
Lineage track(int v, const TrackState& state, const Filtration& filt);

}  // namespace sttrack
