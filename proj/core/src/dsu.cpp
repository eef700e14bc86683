#include "netclass/dsu.hpp"

#include <string>

namespace netclass {

Dsu::Dsu(int n) {
  if (n < 0) throw InputError("negative element count");
  parent_.resize(n + 1);
  rank_.resize(n + 1, 1);
  for (int i = 0; i <= n; ++i) parent_[i] = i;
  components_ = n;
}

Vertex Dsu::find(Vertex x) {
  if (x < 1 || x >= static_cast<Vertex>(parent_.size()))
    throw InputError("element " + std::to_string(x) + " out of range");
  Vertex root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    Vertex next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool Dsu::unite(Vertex x, Vertex y) {
  Vertex rx = find(x);
  Vertex ry = find(y);
  if (rx == ry) return false;
  if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
  parent_[ry] = rx;
  rank_[rx] += rank_[ry];
  --components_;
  return true;
}

}  // namespace netclass
