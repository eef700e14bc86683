#pragma once

#include <string>
#include <vector>

#include "netclass/bipartite.hpp"
#include "netclass/flow.hpp"
#include "netclass/graph.hpp"
#include "netclass/matching_classify.hpp"

namespace netclass {

// Exhaustive reference implementations, exponential on purpose. Each throws
// OracleLimitError beyond its size guard instead of grinding silently.

// Every maximum matching (weighted: every minimum-cost maximum matching).
// Guards: n_left * n_right <= 20 and m <= 20.
std::vector<Matching> enum_optimal_matchings(const BipartiteGraph& g, bool weighted);

// Every minimum spanning tree as a sorted edge id set. Guard: m <= 12.
std::vector<std::vector<EdgeId>> enum_min_spanning_trees(const Multigraph& g);

// Arcs whose capacity increase by one raises the maximum flow, found by
// recomputing the flow per arc. Guard: n <= 12.
std::vector<int> flow_increment_oracle(const FlowNetwork& net);

// Categories of elements 0..element_count-1 against a nonempty family of
// sets: Every if present in all, Never in none, Some otherwise.
std::vector<Category> classification_from_enumeration(
    int element_count, const std::vector<std::vector<int>>& family);

// Edge and vertex categories straight from matching enumeration.
BipartiteClassification matching_classification_oracle(const BipartiteGraph& g, bool weighted);

// Edge categories straight from spanning tree enumeration.
std::vector<Category> mst_classification_oracle(const Multigraph& g);

struct Mismatch {
  std::string element;
  std::string expected;
  std::string actual;
};

struct OracleReport {
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

OracleReport compare(const std::vector<Category>& expected, const std::vector<Category>& actual,
                     const std::string& element_prefix);
OracleReport compare(const BipartiteClassification& expected,
                     const BipartiteClassification& actual);
// Compares two id sets over elements 0..element_count-1.
OracleReport compare_id_sets(const std::vector<int>& expected, const std::vector<int>& actual,
                             int element_count, const std::string& element_prefix);

}  // namespace netclass
