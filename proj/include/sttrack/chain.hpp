#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace sttrack {

// A 1-chain with Z/2 coefficients in set notation: the set of edge
// indices with coefficient 1. Addition is symmetric difference, so every
// chain is its own inverse.
class EdgeChain {
 public:
  EdgeChain() = default;
  explicit EdgeChain(std::vector<int32_t> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
  }

  bool empty() const { return edges_.empty(); }
  std::size_t size() const { return edges_.size(); }
  const std::vector<int32_t>& edges() const { return edges_; }
  bool contains(int32_t e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  void add(int32_t e) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
      edges_.erase(it);
    else
      edges_.insert(it, e);
  }

  void add(const EdgeChain& other) {
    std::vector<int32_t> out;
    out.reserve(edges_.size() + other.edges_.size());
    std::set_symmetric_difference(edges_.begin(), edges_.end(),
                                  other.edges_.begin(), other.edges_.end(),
                                  std::back_inserter(out));
    edges_ = std::move(out);
  }

  friend EdgeChain operator+(EdgeChain a, const EdgeChain& b) {
    a.add(b);
    return a;
  }

  bool operator==(const EdgeChain&) const = default;

 private:
  std::vector<int32_t> edges_;  // sorted, unique
};

}  // namespace sttrack
