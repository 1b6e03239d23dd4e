#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace algconn {

/// Hard cap on vertex count for all analysis paths (eigen-solver sizing).
inline constexpr int kMaxVertices = 64;

class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class VertexOutOfRange : public GraphError {
public:
  using GraphError::GraphError;
};

class SelfArcError : public GraphError {
public:
  using GraphError::GraphError;
};

class DuplicateArcError : public GraphError {
public:
  using GraphError::GraphError;
};

class SizeCapError : public GraphError {
public:
  using GraphError::GraphError;
};

/// Directed edge (tail, head): tail -> head. Vertices are 1-indexed.
using Arc = std::pair<int, int>;

class IntMatrix {
public:
  explicit IntMatrix(int order)
      : order_(order), entries_(static_cast<size_t>(order) * order, 0) {
    if (order < 1) throw GraphError("matrix order must be positive");
  }

  int order() const { return order_; }

  long long& at(int i, int j) {
    return entries_[static_cast<size_t>(i) * order_ + j];
  }
  long long at(int i, int j) const {
    return entries_[static_cast<size_t>(i) * order_ + j];
  }

  long long trace() const;
  bool has_zero_row_sums() const;

  bool operator==(const IntMatrix&) const = default;

private:
  int order_;
  std::vector<long long> entries_;
};

/// Simple directed graph: n vertices labeled 1..n, duplicate-free
/// self-loop-free arc list kept in lexicographic (tail, head) order.
/// Immutable after construction; arc insertion returns a new graph.
class DiGraph {
public:
  explicit DiGraph(int n);
  DiGraph(int n, std::vector<Arc> arcs);

  int order() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_arc(int tail, int head) const;

  /// Returns a copy of this graph with (tail, head) inserted.
  DiGraph with_arc(int tail, int head) const;

  std::vector<int> in_degrees() const;
  int max_in_degree() const;

  /// In-degree Laplacian L = D - A; row sums are all zero.
  IntMatrix laplacian() const;

  DiGraph complement() const;
  DiGraph transpose() const;

  /// True iff some vertex reaches all others by directed paths.
  bool is_rooted() const;

  /// Number of condensation components with no incoming arcs; equals the
  /// minimum number of directed trees in any spanning directed forest.
  int source_scc_count() const;

  bool operator==(const DiGraph&) const = default;
  auto operator<=>(const DiGraph&) const = default;

private:
  void check_endpoints(int tail, int head) const;

  int n_;
  std::vector<Arc> arcs_;
};

/// Arc-set union of two graphs on the same vertex set.
DiGraph graph_union(const DiGraph& a, const DiGraph& b);

}  // namespace algconn
