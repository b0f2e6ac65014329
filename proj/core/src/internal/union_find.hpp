#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace hpoly::internal {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Smaller root wins so representatives are minimum elements.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    --components_;
    return true;
  }

  std::size_t components() const { return components_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::size_t components_;
};

}  // namespace hpoly::internal
