#include "chroma/constructive.hpp"

#include <queue>
#include <stdexcept>
#include <string>

#include "chroma/solver.hpp"

namespace chroma {

Coloring mis_peel_color(const FiniteGraph& g) {
  const int n = g.vertex_count();
  Coloring c{std::vector<int>(n, -1)};
  int remaining = n;
  for (int round = 0; remaining > 0; ++round) {
    std::vector<char> blocked(n, 0);
    for (int v = 0; v < n; ++v) {
      if (c.colours[v] != -1 || blocked[v]) continue;
      c.colours[v] = round;
      --remaining;
      for (int w : g.neighbors(v)) {
        if (c.colours[w] == -1) blocked[w] = 1;
      }
    }
  }
  return c;
}

Coloring two_color_acyclic(const FiniteGraph& g, const std::vector<int>& transversal) {
  if (!analyze_structure(g).acyclic) throw std::invalid_argument("graph is cyclic");
  const ComponentOrder co = component_order(g);
  const int n = g.vertex_count();

  std::vector<char> covered(co.component_count(), 0);
  for (int v : transversal) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("transversal vertex " + std::to_string(v) + " out of range");
    }
    if (covered[co.component_id[v]]) {
      throw std::invalid_argument("transversal picks component of vertex " + std::to_string(v) +
                                  " twice");
    }
    covered[co.component_id[v]] = 1;
  }
  if (static_cast<int>(transversal.size()) != co.component_count()) {
    throw std::invalid_argument("transversal must pick exactly one vertex per component");
  }

  Coloring c{std::vector<int>(n, -1)};
  for (int root : transversal) {
    std::queue<int> frontier;
    c.colours[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v)) {
        if (c.colours[w] == -1) {
          c.colours[w] = c.colours[v] ^ 1;
          frontier.push(w);
        }
      }
    }
  }
  return c;
}

Coloring palette_color(const FiniteGraph& g, const ComponentOrder& co) {
  const int n = g.vertex_count();
  const int chi = chromatic_number(g).chi;
  Coloring out{std::vector<int>(n, -1)};

  for (int comp = 0; comp < co.component_count(); ++comp) {
    const int begin = co.component_start[comp];
    const int size = co.component_size(comp);

    // Induced subgraph in block-local indices (local id = component rank).
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < size; ++i) {
      const int v = co.order[begin + i];
      for (int w : g.neighbors(v)) {
        const int j = co.position[w] - begin;
        if (j > i) edges.emplace_back(i, j);
      }
    }
    const FiniteGraph component(size, edges);

    std::vector<int> pins(size, -1);
    for (int i = 0; i < size; ++i) {
      int chosen = -1;
      for (int colour = 0; colour < chi && chosen == -1; ++colour) {
        pins[i] = colour;
        if (solve_k_coloring(component, chi, pins)) chosen = colour;
      }
      if (chosen == -1) throw std::logic_error("palette extension must exist");
      pins[i] = chosen;
      out.colours[co.order[begin + i]] = chosen;
    }
  }
  return out;
}

}  // namespace chroma
