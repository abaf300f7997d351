#pragma once

#include <utility>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Ordered finite family of total functions on a shared vertex set.
struct FunctionFamily {
  int vertex_count = 0;
  std::vector<std::vector<int>> functions;

  FunctionFamily() = default;
  FunctionFamily(int vertex_count, std::vector<std::vector<int>> functions);

  int function_count() const { return static_cast<int>(functions.size()); }
};

/// Graph with an edge {v, w}, v != w, whenever some family member maps one
/// endpoint to the other.
FiniteGraph generate_graph(const FunctionFamily& family);

/// Family of involutions (extended by the identity) covering every edge in
/// both directions: for each edge {v, w} some member f has f(v) = w and
/// f(w) = v. Built from a proper edge colouring, so it has at most
/// max_degree + 1 members.
FunctionFamily covering_family(const FiniteGraph& g);

/// For each vertex x moved by the family, the pair (x, f_i(x)) for the
/// least i with f_i(x) != x. Sorted by x.
std::vector<std::pair<int, int>> uniformize(const FunctionFamily& family);

}  // namespace chroma
