#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace ccl {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) { resize(n); }

  void resize(std::size_t n) {
    std::size_t old = parent_.size();
    parent_.resize(n);
    size_.resize(n, 1);
    std::iota(parent_.begin() + static_cast<std::ptrdiff_t>(old), parent_.end(), old);
  }
  std::size_t add() {
    resize(parent_.size() + 1);
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // the smaller root index survives, so class representatives are stable
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace ccl
