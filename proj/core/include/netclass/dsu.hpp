#pragma once

#include <vector>

#include "netclass/types.hpp"

namespace netclass {

// Disjoint-set union over vertices 1..n, path compression plus union by
// size. find() is stable between unite() calls.
class Dsu {
 public:
  explicit Dsu(int n);

  Vertex find(Vertex x);
  // Joins the sets of x and y; false iff they were already joined.
  bool unite(Vertex x, Vertex y);

  int size() const { return static_cast<int>(parent_.size()) - 1; }
  int component_count() const { return components_; }

 private:
  std::vector<Vertex> parent_;
  std::vector<int> rank_;
  int components_ = 0;
};

}  // namespace netclass
