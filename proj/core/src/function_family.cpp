#include "chroma/function_family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace chroma {

FunctionFamily::FunctionFamily(int vertex_count, std::vector<std::vector<int>> fns)
    : vertex_count(vertex_count), functions(std::move(fns)) {
  if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (const auto& f : functions) {
    if (static_cast<int>(f.size()) != vertex_count) {
      throw std::invalid_argument("family functions must be total on the vertex set");
    }
    for (int image : f) {
      if (image < 0 || image >= vertex_count) {
        throw std::invalid_argument("function image " + std::to_string(image) + " out of range");
      }
    }
  }
}

FiniteGraph generate_graph(const FunctionFamily& family) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& f : family.functions) {
    for (int v = 0; v < family.vertex_count; ++v) {
      if (f[v] != v) edges.emplace_back(v, f[v]);
    }
  }
  return FiniteGraph(family.vertex_count, edges);
}

std::vector<std::pair<int, int>> uniformize(const FunctionFamily& family) {
  std::vector<std::pair<int, int>> selected;
  for (int x = 0; x < family.vertex_count; ++x) {
    for (const auto& f : family.functions) {
      if (f[x] != x) {
        selected.emplace_back(x, f[x]);
        break;
      }
    }
  }
  return selected;
}

namespace {

// Proper edge colouring with at most max_degree + 1 colours via fan
// rotation and alternating-path inversion. Colours are 0..palette-1.
class EdgeColorer {
 public:
  explicit EdgeColorer(const FiniteGraph& g)
      : g_(g),
        n_(g.vertex_count()),
        palette_(g.max_degree() + 1),
        partner_(n_, std::vector<int>(palette_, -1)) {
    arc_colour_.reserve(n_);
    for (int v = 0; v < n_; ++v) {
      arc_colour_.emplace_back(g_.neighbors(v).size(), -1);
    }
  }

  void run() {
    for (auto [u, v] : g_.edges()) colour_edge(u, v);
  }

  int palette() const { return palette_; }
  int partner(int v, int c) const { return partner_[v][c]; }

 private:
  int arc_index(int u, int v) const {
    const auto& nb = g_.neighbors(u);
    return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
  }

  int edge_colour(int u, int v) const { return arc_colour_[u][arc_index(u, v)]; }

  void set_edge(int u, int v, int c) {
    arc_colour_[u][arc_index(u, v)] = c;
    arc_colour_[v][arc_index(v, u)] = c;
    partner_[u][c] = v;
    partner_[v][c] = u;
  }

  void clear_edge(int u, int v) {
    const int c = edge_colour(u, v);
    arc_colour_[u][arc_index(u, v)] = -1;
    arc_colour_[v][arc_index(v, u)] = -1;
    partner_[u][c] = -1;
    partner_[v][c] = -1;
  }

  int free_colour(int v) const {
    for (int c = 0; c < palette_; ++c) {
      if (partner_[v][c] == -1) return c;
    }
    throw std::logic_error("vertex with no free colour");
  }

  // Swap colours c and d along the maximal alternating path leaving u on
  // its d-coloured edge. Afterwards d is free on u.
  void invert_path(int u, int c, int d) {
    std::vector<std::tuple<int, int, int>> path;  // (x, y, old colour)
    int x = u;
    int col = d;
    while (true) {
      const int y = partner_[x][col];
      if (y == -1) break;
      path.emplace_back(x, y, col);
      x = y;
      col = col == d ? c : d;
    }
    for (auto [a, b, old] : path) clear_edge(a, b);
    for (auto [a, b, old] : path) set_edge(a, b, old == d ? c : d);
  }

  void colour_edge(int u, int v) {
    // Maximal fan of u starting at v: each next vertex is joined to u by an
    // edge whose colour is free on the previous fan vertex.
    std::vector<int> fan{v};
    std::vector<char> in_fan(n_, 0);
    in_fan[v] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      const int last = fan.back();
      for (int c = 0; c < palette_; ++c) {
        const int w = partner_[u][c];
        if (w == -1 || in_fan[w] || partner_[last][c] != -1) continue;
        fan.push_back(w);
        in_fan[w] = 1;
        grew = true;
        break;
      }
    }

    const int c = free_colour(u);
    const int d = free_colour(fan.back());
    if (c != d) invert_path(u, c, d);

    // Shortest fan prefix that is still a fan and ends where d is free.
    int w = -1;
    for (int i = 0; i < static_cast<int>(fan.size()); ++i) {
      if (i > 0) {
        const int col = edge_colour(u, fan[i]);
        if (col == -1 || partner_[fan[i - 1]][col] != -1) break;
      }
      if (partner_[fan[i]][d] == -1) {
        w = i;
        break;
      }
    }
    if (w == -1) throw std::logic_error("edge colouring fan invariant broken");

    // Rotate: edge (u, fan[j]) takes the colour of (u, fan[j+1]); the tip
    // gets d. fan[0] is the uncoloured edge being inserted.
    for (int j = 0; j < w; ++j) {
      const int col = edge_colour(u, fan[j + 1]);
      clear_edge(u, fan[j + 1]);
      set_edge(u, fan[j], col);
    }
    set_edge(u, fan[w], d);
  }

  const FiniteGraph& g_;
  int n_;
  int palette_;
  std::vector<std::vector<int>> partner_;     // vertex x colour -> other endpoint
  std::vector<std::vector<int>> arc_colour_;  // parallel to neighbors(v)
};

}  // namespace

FunctionFamily covering_family(const FiniteGraph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) return FunctionFamily(n, {});
  EdgeColorer colorer(g);
  colorer.run();
  std::vector<std::vector<int>> functions;
  for (int c = 0; c < colorer.palette(); ++c) {
    bool used = false;
    std::vector<int> f(n);
    for (int v = 0; v < n; ++v) {
      const int w = colorer.partner(v, c);
      f[v] = w == -1 ? v : w;
      used = used || w != -1;
    }
    if (used) functions.push_back(std::move(f));
  }
  return FunctionFamily(n, std::move(functions));
}

}  // namespace chroma
