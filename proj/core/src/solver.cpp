#include "chroma/solver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace chroma {

namespace {

void check_pins(int n, int k, const std::vector<int>& pinned) {
  if (!pinned.empty() && static_cast<int>(pinned.size()) != n) {
    throw std::invalid_argument("pin vector must cover every vertex or be empty");
  }
  for (int p : pinned) {
    if (p != -1 && (p < 0 || p >= k)) {
      throw std::invalid_argument("pinned colour " + std::to_string(p) + " out of range for " +
                                  std::to_string(k) + " colours");
    }
  }
}

}  // namespace

bool is_proper(const FiniteGraph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) {
    throw std::invalid_argument("colouring must be total on the vertex set");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (c[v] < 0) throw std::invalid_argument("colouring must be total on the vertex set");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int w : g.neighbors(v)) {
      if (w > v && c[v] == c[w]) return false;
    }
  }
  return true;
}

Coloring greedy_coloring(const FiniteGraph& g) {
  const int n = g.vertex_count();
  Coloring c{std::vector<int>(n, -1)};
  std::vector<char> used(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) {
      if (c.colours[w] >= 0) used[c.colours[w]] = 1;
    }
    int col = 0;
    while (used[col]) ++col;
    c.colours[v] = col;
    for (int w : g.neighbors(v)) {
      if (c.colours[w] >= 0) used[c.colours[w]] = 0;
    }
  }
  return c;
}

std::optional<Coloring> solve_k_coloring(const FiniteGraph& g, int k,
                                         const std::vector<int>& pinned) {
  const int n = g.vertex_count();
  if (k < 0) throw std::invalid_argument("colour count must be nonnegative");
  check_pins(n, k, pinned);
  if (n == 0) return Coloring{{}};
  if (k == 0) return std::nullopt;

  std::vector<int> colour(n, -1);
  std::vector<std::vector<int>> nbr_count(n, std::vector<int>(k, 0));
  std::vector<int> saturation(n, 0);
  int uncoloured = n;

  const auto place = [&](int v, int c) {
    colour[v] = c;
    --uncoloured;
    for (int w : g.neighbors(v)) {
      if (nbr_count[w][c]++ == 0) ++saturation[w];
    }
  };
  const auto unplace = [&](int v, int c) {
    colour[v] = -1;
    ++uncoloured;
    for (int w : g.neighbors(v)) {
      if (--nbr_count[w][c] == 0) --saturation[w];
    }
  };

  if (!pinned.empty()) {
    for (int v = 0; v < n; ++v) {
      if (pinned[v] == -1) continue;
      if (nbr_count[v][pinned[v]] > 0) return std::nullopt;  // pins clash
      place(v, pinned[v]);
    }
  }

  const auto search = [&](auto&& self) -> bool {
    if (uncoloured == 0) return true;
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v] == -1 && (best == -1 || saturation[v] > saturation[best])) best = v;
    }
    if (saturation[best] >= k) return false;
    for (int c = 0; c < k; ++c) {
      if (nbr_count[best][c] != 0) continue;
      place(best, c);
      if (self(self)) return true;
      unplace(best, c);
    }
    return false;
  };

  if (!search(search)) return std::nullopt;
  return Coloring{std::move(colour)};
}

namespace {

std::vector<int> greedy_clique(const FiniteGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::vector<int> clique;
  for (int v : order) {
    bool joined = true;
    for (int u : clique) {
      if (!g.adjacent(u, v)) {
        joined = false;
        break;
      }
    }
    if (joined) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace

ChiResult chromatic_number(const FiniteGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> clique = greedy_clique(g);
  Coloring greedy = greedy_coloring(g);
  const int upper = greedy.distinct();
  const int lower = std::max(static_cast<int>(clique.size()), n > 0 ? 1 : 0);
  for (int k = lower; k < upper; ++k) {
    std::vector<int> pin(n, -1);
    pin[0] = 0;
    if (auto witness = solve_k_coloring(g, k, pin)) {
      ChiResult result{k, std::move(*witness), std::nullopt};
      if (static_cast<int>(clique.size()) == k) result.clique = std::move(clique);
      return result;
    }
  }
  ChiResult result{upper, std::move(greedy), std::nullopt};
  if (static_cast<int>(clique.size()) == upper) result.clique = std::move(clique);
  return result;
}

int brute_force_chromatic(const FiniteGraph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw std::invalid_argument("brute-force check limited to 8 vertices");
  if (n == 0) return 0;
  const auto edges = g.edges();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> a(n, 0);
    while (true) {
      bool proper = true;
      for (auto [u, v] : edges) {
        if (a[u] == a[v]) {
          proper = false;
          break;
        }
      }
      if (proper) return k;
      int i = 0;
      while (i < n && ++a[i] == k) a[i++] = 0;
      if (i == n) break;
    }
  }
  return n;  // unreachable: n colours always suffice
}

StructureReport analyze_structure(const FiniteGraph& g) {
  const int n = g.vertex_count();
  StructureReport report;
  report.max_degree = g.max_degree();

  std::vector<int> side(n, -1);
  int components = 0;
  bool bipartite = true;
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    ++components;
    std::queue<int> frontier;
    side[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = side[v] ^ 1;
          frontier.push(w);
        } else if (side[w] == side[v]) {
          bipartite = false;
        }
      }
    }
  }
  report.bipartite = bipartite;
  report.connected = components <= 1;
  report.acyclic = g.edge_count() == n - components;  // forest test

  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> removed(n, 0);
  int degeneracy = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    }
    degeneracy = std::max(degeneracy, deg[best]);
    removed[best] = 1;
    for (int w : g.neighbors(best)) {
      if (!removed[w]) --deg[w];
    }
  }
  report.degeneracy = degeneracy;
  return report;
}

std::string to_dimacs_cnf(const FiniteGraph& g, int k, const std::vector<int>& pinned) {
  const int n = g.vertex_count();
  if (k < 0) throw std::invalid_argument("colour count must be nonnegative");
  check_pins(n, k, pinned);

  const auto var = [k](int v, int c) { return v * k + c + 1; };
  std::ostringstream body;
  long long clauses = 0;

  if (k == 0) {
    if (n > 0) {
      body << "0\n";  // empty clause: no colours, at least one vertex
      clauses = 1;
    }
  } else {
    for (int v = 0; v < n; ++v) {
      for (int c = 0; c < k; ++c) body << var(v, c) << ' ';
      body << "0\n";
      ++clauses;
      for (int c = 0; c < k; ++c) {
        for (int d = c + 1; d < k; ++d) {
          body << -var(v, c) << ' ' << -var(v, d) << " 0\n";
          ++clauses;
        }
      }
    }
    for (auto [u, v] : g.edges()) {
      for (int c = 0; c < k; ++c) {
        body << -var(u, c) << ' ' << -var(v, c) << " 0\n";
        ++clauses;
      }
    }
    if (!pinned.empty()) {
      for (int v = 0; v < n; ++v) {
        if (pinned[v] != -1) {
          body << var(v, pinned[v]) << " 0\n";
          ++clauses;
        }
      }
    }
  }

  std::ostringstream out;
  out << "p cnf " << static_cast<long long>(n) * k << ' ' << clauses << '\n' << body.str();
  return out.str();
}

}  // namespace chroma
