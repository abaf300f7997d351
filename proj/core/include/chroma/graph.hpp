#pragma once

#include <utility>
#include <vector>

namespace chroma {

/// Simple undirected graph on vertices 0..vertex_count-1. Immutable after
/// construction; self-loops are rejected and duplicate edges collapse.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  FiniteGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  int max_degree() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const FiniteGraph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;  // sorted, deduplicated
};

/// Connected components in a fixed global enumeration: components are
/// indexed by their minimum vertex in ascending order, and each component
/// occupies a contiguous block of `order` holding its BFS discovery
/// sequence from that minimum vertex (neighbours visited in ascending
/// index order).
struct ComponentOrder {
  std::vector<int> order;            // permutation of the vertices
  std::vector<int> position;         // vertex -> index into order
  std::vector<int> component_id;     // vertex -> component index
  std::vector<int> component_start;  // component -> first index into order, plus end sentinel

  int component_count() const { return static_cast<int>(component_start.size()) - 1; }
  int component_size(int c) const { return component_start[c + 1] - component_start[c]; }
};

ComponentOrder component_order(const FiniteGraph& g);

/// Number of vertices of v's component that precede v in the order.
int component_rank(const ComponentOrder& co, int v);

}  // namespace chroma
