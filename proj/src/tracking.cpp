#include "sttrack/tracking.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace sttrack {

namespace {

// A temporal edge may only be walked from the newer frame to the older
// one; spatial edges stay inside a frame.
bool monotone_step(const Filtration& filt, int edge, int from, int to) {
  if (!filt.is_temporal(edge)) return true;
  return filt.frame_of_vertex(to) == filt.frame_of_vertex(from) - 1;
}

// Shortest time-monotone path from `from` to `to` over edges of index
// <= max_index. Returns an empty chain when no such path exists.
EdgeChain shortest_monotone_path(int from, int to, const Filtration& filt,
                                 int max_index) {
  if (from == to) return {};
  std::vector<int> via_edge(static_cast<std::size_t>(filt.size()) + 1, 0);
  std::vector<int> pred(static_cast<std::size_t>(filt.size()) + 1, 0);
  std::deque<int> queue{from};
  pred[from] = from;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto [edge, other] : filt.incident(u)) {
      if (edge > max_index || pred[other] != 0) continue;
      if (!monotone_step(filt, edge, u, other)) continue;
      pred[other] = u;
      via_edge[other] = edge;
      if (other == to) {
        EdgeChain path;
        for (int cur = to; cur != from; cur = pred[cur])
          path.add(via_edge[cur]);
        return path;
      }
      queue.push_back(other);
    }
  }
  return {};
}

void remediate_dangling(TrackState& st, const Filtration& filt, int i, int k,
                        int kp) {
  for (int l = 1; l <= i; ++l) {
    if (!filt.is_vertex(l) || st.f[l] != k) continue;
    RemediationEvent ev{i, l, false};
    EdgeChain path = shortest_monotone_path(l, kp, filt, i);
    if (!path.empty()) {
      st.f[l] = kp;
      st.phi[l] = std::move(path);
      ev.repaired = true;
    }
    st.remediation.push_back(ev);
  }
}

}  // namespace

TrackState run_algorithm1(const Filtration& filt) {
  const int m = filt.size();
  TrackState st;
  st.f.assign(static_cast<std::size_t>(m) + 1, 0);
  st.phi.assign(static_cast<std::size_t>(m) + 1, {});

  for (int i = 1; i <= m; ++i) {
    if (filt.is_vertex(i)) {
      st.survivors.insert(i);
      st.f[i] = i;
      st.raw_bars.emplace_back(i, i);
      continue;
    }
    auto [a, b] = filt.endpoints(i);
    if (st.f[a] == st.f[b]) continue;  // the edge closes a 1-cycle

    int j = a, jp = b;
    if (st.f[j] < st.f[jp]) std::swap(j, jp);
    const int k = st.f[j], kp = st.f[jp];  // kp < k
    const int r = std::max(filt.frame_of_vertex(j), filt.frame_of_vertex(jp));

    TeEdge entry{i, j, jp, k, kp, false};
    if (filt.frame_of_vertex(k) == r) {
      st.survivors.erase(k);
      entry.removed_k = true;
    }

    // Staged sweep: candidate chains read the pre-edge phi values and
    // are committed together afterwards.
    std::vector<std::pair<int, EdgeChain>> updates;
    for (int l = 1; l < i; ++l) {
      if (!filt.is_vertex(l) || st.f[l] != k) continue;
      if (filt.frame_of_vertex(l) != r) continue;
      EdgeChain cand = st.phi[l];
      cand.add(st.phi[j]);
      cand.add(i);
      cand.add(st.phi[jp]);
      bool ok = (l == j);
      if (!ok) {
        auto chk = is_spatiotemporal_path(cand, filt);
        ok = chk.valid && ((chk.v == l && chk.w == kp) ||
                           (chk.v == kp && chk.w == l));
      }
      if (ok) updates.emplace_back(l, std::move(cand));
    }
    for (auto& [l, chain] : updates) {
      st.f[l] = kp;
      st.phi[l] = std::move(chain);
    }

    st.raw_bars.emplace_back(k, i);
    st.raw_bars.emplace_back(kp, i);
    st.te.push_back(entry);

    if (entry.removed_k) remediate_dangling(st, filt, i, k, kp);
  }
  return st;
}

Barcode consolidate(const TrackState& state) {
  std::map<int, int> death;
  for (auto [birth, d] : state.raw_bars) {
    auto [it, fresh] = death.emplace(birth, d);
    if (!fresh) it->second = std::max(it->second, d);
  }
  Barcode bc;
  for (auto [birth, d] : death) bc.bars.push_back(Bar{birth, d, birth});
  return bc;
}

PathCheck is_spatiotemporal_path(const EdgeChain& chain,
                                 const Filtration& filt) {
  PathCheck out;
  if (chain.empty()) {
    out.valid = true;
    return out;
  }
  std::unordered_map<int, std::vector<std::pair<int, int>>> adj;
  std::unordered_map<int, int> slab_edges;
  for (int e : chain.edges()) {
    if (e < 1 || e > filt.size() || filt.cell(e).dim != 1) {
      out.reason = "chain member is not an edge of the filtration";
      return out;
    }
    auto [a, b] = filt.endpoints(e);
    adj[a].emplace_back(e, b);
    adj[b].emplace_back(e, a);
    if (int s = filt.slab_of(e); s != 0 && ++slab_edges[s] > 1) {
      out.reason = "two edges in one temporal slab";
      return out;
    }
  }
  std::vector<int> ends;
  for (const auto& [v, inc] : adj) {
    if (inc.size() > 2) {
      out.reason = "vertex of degree greater than two";
      return out;
    }
    if (inc.size() == 1) ends.push_back(v);
  }
  if (ends.size() != 2) {
    out.reason = "boundary is not a pair of vertices";
    return out;
  }
  // Walk from one endpoint; degrees <= 2 make the walk unique.
  std::size_t used = 0;
  int cur = ends[0], prev_edge = 0;
  for (;;) {
    const auto& inc = adj[cur];
    int next_edge = 0, next_vertex = 0;
    for (auto [e, other] : inc)
      if (e != prev_edge) {
        next_edge = e;
        next_vertex = other;
      }
    if (next_edge == 0) break;
    ++used;
    prev_edge = next_edge;
    cur = next_vertex;
  }
  if (used != chain.size() || cur != ends[1]) {
    out.reason = "chain is not connected";
    return out;
  }
  out.valid = true;
  out.v = ends[0];
  out.w = ends[1];
  return out;
}

namespace {

struct SubGraph {
  std::vector<int> vertices;
  std::vector<int> edges;
  std::unordered_map<int, std::vector<int>> adj;  // vertex -> neighbors

  bool connected() const {
    if (vertices.empty()) return false;
    std::unordered_map<int, bool> seen;
    std::deque<int> queue{vertices.front()};
    seen[vertices.front()] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      auto it = adj.find(u);
      if (it == adj.end()) continue;
      for (int w : it->second)
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          queue.push_back(w);
        }
    }
    return reached == vertices.size();
  }
  bool acyclic_if_connected() const {
    return edges.size() + 1 == vertices.size();
  }
};

SubGraph subgraph_of_edges(const std::vector<int>& edge_indices,
                           const std::vector<int>& extra_vertices,
                           const Filtration& filt) {
  SubGraph g;
  std::unordered_map<int, bool> vseen;
  auto add_vertex = [&](int v) {
    if (!vseen[v]) {
      vseen[v] = true;
      g.vertices.push_back(v);
    }
  };
  for (int e : edge_indices) {
    auto [a, b] = filt.endpoints(e);
    add_vertex(a);
    add_vertex(b);
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
    g.edges.push_back(e);
  }
  for (int v : extra_vertices) add_vertex(v);
  return g;
}

}  // namespace

bool is_homological_0path(const std::vector<Cube>& cells,
                          const Filtration& filt) {
  std::vector<int> edges, lone_vertices;
  for (const auto& q : cells) {
    int idx = filt.index_of(q);
    if (idx == 0) return false;  // not a subcomplex of the filtration
    if (q.dim() == 1)
      edges.push_back(idx);
    else if (q.dim() == 0)
      lone_vertices.push_back(idx);
    else
      return false;
  }
  SubGraph g = subgraph_of_edges(edges, lone_vertices, filt);
  // H0 = Z/2 and H1 = 0: one component, no cycles.
  if (!g.connected() || !g.acyclic_if_connected()) return false;
  // The boundary must be two vertices.
  std::unordered_map<int, int> degree;
  for (int e : edges) {
    auto [a, b] = filt.endpoints(e);
    ++degree[a];
    ++degree[b];
  }
  int odd = 0;
  for (auto [v, d] : degree) odd += d & 1;
  if (odd != 2) return false;
  // Per-slab condition: the intersection with each temporal slab is
  // empty or connected and acyclic.
  std::map<int, std::vector<int>> by_slab;
  for (int e : edges)
    if (int s = filt.slab_of(e)) by_slab[s].push_back(e);
  for (const auto& [slab, slab_edges] : by_slab) {
    SubGraph sg = subgraph_of_edges(slab_edges, {}, filt);
    if (!sg.connected() || !sg.acyclic_if_connected()) return false;
  }
  return true;
}

Barcode classical_0barcode(const Filtration& filt) {
  const int m = filt.size();
  std::vector<int> parent(static_cast<std::size_t>(m) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  // Roots stay at the minimum index of their component, so find() gives
  // the elder representative directly.
  auto find = [&](int v) {
    int root = v;
    while (parent[root] != root) root = parent[root];
    while (parent[v] != root) v = std::exchange(parent[v], root);
    return root;
  };
  std::map<int, int> death;
  for (int i = 1; i <= m; ++i) {
    if (filt.is_vertex(i)) continue;
    auto [a, b] = filt.endpoints(i);
    int ra = find(a), rb = find(b);
    if (ra == rb) continue;
    int elder = std::min(ra, rb), younger = std::max(ra, rb);
    parent[younger] = elder;
    death.emplace(younger, i);
  }
  Barcode bc;
  for (int v = 1; v <= m; ++v) {
    if (!filt.is_vertex(v)) continue;
    auto it = death.find(v);
    bc.bars.push_back(Bar{v, it == death.end() ? m : it->second, v});
  }
  return bc;
}

std::vector<int> monotone_reachable(int v, const Filtration& filt) {
  std::vector<char> seen(static_cast<std::size_t>(filt.size()) + 1, 0);
  std::deque<int> queue{v};
  seen[v] = 1;
  std::vector<int> out{v};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto [edge, other] : filt.incident(u)) {
      if (seen[other] || !monotone_step(filt, edge, u, other)) continue;
      seen[other] = 1;
      out.push_back(other);
      queue.push_back(other);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int oldest_connected_oracle(int v, const Filtration& filt) {
  if (v < 1 || v > filt.size() || !filt.is_vertex(v))
    throw std::invalid_argument("not a vertex of the filtration");
  return monotone_reachable(v, filt).front();
}

TrackingTree build_tracking_tree(const TrackState& state,
                                 const Filtration& filt) {
  TrackingTree tree;
  auto reaches = [&tree](int from, int target) {
    for (int cur = from;;) {
      auto it = tree.parent.find(cur);
      if (it == tree.parent.end()) return false;
      cur = it->second.first;
      if (cur == target) return true;
    }
  };
  for (const auto& e : state.te) {
    int child = e.j, par = e.jp;
    if (filt.is_temporal(e.edge) &&
        filt.frame_of_vertex(e.jp) > filt.frame_of_vertex(e.j))
      std::swap(child, par);
    if (tree.parent.count(child)) continue;
    if (reaches(par, child)) continue;
    tree.parent[child] = {par, e.edge};
  }
  return tree;
}

Lineage track(int v, const TrackState& state, const TrackingTree& tree,
              const Filtration& filt) {
  if (v < 1 || v > filt.size() || !filt.is_vertex(v))
    throw std::invalid_argument("unknown vertex index");
  Lineage ln;
  ln.vertex = v;
  ln.birth_vertex = state.f[v];
  ln.birth_frame = filt.frame_of_vertex(ln.birth_vertex);
  if (!state.phi[v].empty()) {
    std::unordered_map<int, std::vector<std::pair<int, int>>> adj;
    for (int e : state.phi[v].edges()) {
      auto [a, b] = filt.endpoints(e);
      adj[a].emplace_back(e, b);
      adj[b].emplace_back(e, a);
    }
    int cur = v, prev_edge = 0;
    for (;;) {
      const Cube& q = filt.cell(cur).cube;
      ln.walk.push_back({filt.frame_of_vertex(cur), q.x2(), q.y2()});
      int next_edge = 0, next_vertex = 0;
      for (auto [e, other] : adj[cur])
        if (e != prev_edge) {
          next_edge = e;
          next_vertex = other;
        }
      if (next_edge == 0) break;
      prev_edge = next_edge;
      cur = next_vertex;
    }
  }
  for (int cur = v;;) {
    auto it = tree.parent.find(cur);
    if (it == tree.parent.end()) break;
    cur = it->second.first;
    ln.ancestors.push_back(cur);
  }
  return ln;
}

Lineage track(int v, const TrackState& state, const Filtration& filt) {
  return track(v, state, build_tracking_tree(state, filt), filt);
}

}  // namespace sttrack
