#pragma once

#include <stdexcept>

namespace netclass {

// Vertices are 1-indexed; edge and arc ids are 0-indexed in input order.
using Vertex = int;
using EdgeId = int;

// Costs are exact decimals scaled to a shared power-of-ten denominator, so
// equality and zero tests are integer comparisons.
using Cost = long long;

// Relation of an element to the family of optimal substructures: member of
// all of them, of some but not all, or of none.
enum class Category { Every, Some, Never };

const char* to_string(Category c);

// Invalid caller-supplied data: bad vertex ids, malformed files, values out
// of the documented domain.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant, e.g. a negative cycle in the residual graph
// of a supposedly optimal matching.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exhaustive reference implementation refused an instance larger than its
// size guard.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netclass
