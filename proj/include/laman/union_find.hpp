#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace laman {

// Union by size with path halving.
class UnionFind {
 public:
  explicit UnionFind(std::int32_t n = 0) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::int32_t find(std::int32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  bool same(std::int32_t a, std::int32_t b) { return find(a) == find(b); }
  std::int32_t size_of(std::int32_t x) { return size_[find(x)]; }
  std::int32_t element_count() const { return static_cast<std::int32_t>(parent_.size()); }

 private:
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> size_;
};

}  // namespace laman
