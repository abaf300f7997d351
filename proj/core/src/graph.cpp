#include "chroma/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace chroma {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for " +
                                std::to_string(n) + " vertices");
  }
}

}  // namespace

FiniteGraph::FiniteGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : n_(vertex_count), adj_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
  if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (auto [u, v] : edges) {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    m_ += static_cast<int>(nb.size());
  }
  m_ /= 2;
}

bool FiniteGraph::adjacent(int u, int v) const {
  check_vertex(u, n_);
  check_vertex(v, n_);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& FiniteGraph::neighbors(int v) const {
  check_vertex(v, n_);
  return adj_[v];
}

int FiniteGraph::degree(int v) const {
  check_vertex(v, n_);
  return static_cast<int>(adj_[v].size());
}

int FiniteGraph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

std::vector<std::pair<int, int>> FiniteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

ComponentOrder component_order(const FiniteGraph& g) {
  const int n = g.vertex_count();
  ComponentOrder co;
  co.order.reserve(n);
  co.position.assign(n, -1);
  co.component_id.assign(n, -1);
  co.component_start.push_back(0);
  for (int s = 0; s < n; ++s) {
    if (co.component_id[s] != -1) continue;
    const int comp = static_cast<int>(co.component_start.size()) - 1;
    std::queue<int> frontier;
    co.component_id[s] = comp;
    frontier.push(s);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      co.position[v] = static_cast<int>(co.order.size());
      co.order.push_back(v);
      for (int w : g.neighbors(v)) {
        if (co.component_id[w] == -1) {
          co.component_id[w] = comp;
          frontier.push(w);
        }
      }
    }
    co.component_start.push_back(static_cast<int>(co.order.size()));
  }
  return co;
}

int component_rank(const ComponentOrder& co, int v) {
  check_vertex(v, static_cast<int>(co.position.size()));
  return co.position[v] - co.component_start[co.component_id[v]];
}

}  // namespace chroma
