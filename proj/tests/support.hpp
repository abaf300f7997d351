#pragma once

// Shared generators and oracles for the unit, CLI and acceptance suites.
// Everything here is independent of the code paths under test: raw_entry
// reads a lasso without normalizing, graph enumeration is bit-mask driven,
// and the random generators are seeded by the caller.

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chroma/function_family.hpp"
#include "chroma/graph.hpp"
#include "chroma/lasso.hpp"

namespace testsupport {

// Entry of the raw (possibly non-canonical) prefix/cycle pair.
inline int raw_entry(const std::vector<int>& prefix, const std::vector<int>& cycle,
                     long long i) {
  const long long p = static_cast<long long>(prefix.size());
  if (i < p) return prefix[static_cast<std::size_t>(i)];
  return cycle[static_cast<std::size_t>((i - p) % static_cast<long long>(cycle.size()))];
}

// All raw (prefix, cycle) pairs over `alphabet` with |prefix| <= max_prefix
// and 1 <= |cycle| <= max_cycle.
template <typename Fn>
void for_each_raw_lasso(int alphabet, int max_prefix, int max_cycle, Fn&& fn) {
  for (int plen = 0; plen <= max_prefix; ++plen) {
    for (int clen = 1; clen <= max_cycle; ++clen) {
      std::vector<int> prefix(plen, 0);
      std::vector<int> cycle(clen, 0);
      const auto advance = [&]() {
        for (int i = 0; i < clen; ++i) {
          if (++cycle[i] < alphabet) return true;
          cycle[i] = 0;
        }
        for (int i = 0; i < plen; ++i) {
          if (++prefix[i] < alphabet) return true;
          prefix[i] = 0;
        }
        return false;
      };
      do {
        fn(prefix, cycle);
      } while (advance());
    }
  }
}

// Canonical lassos in the same range, each exactly once.
template <typename Fn>
void for_each_canonical_lasso(int alphabet, int max_prefix, int max_cycle, Fn&& fn) {
  for_each_raw_lasso(alphabet, max_prefix, max_cycle,
                     [&](const std::vector<int>& prefix, const std::vector<int>& cycle) {
                       chroma::Lasso x(alphabet, prefix, cycle);
                       if (x.prefix().size() == prefix.size() && x.cycle().size() == cycle.size()) {
                         fn(x);
                       }
                     });
}

// Graph on n vertices whose edge set is given by `mask` over the pairs
// (0,1), (0,2), ..., (0,n-1), (1,2), ... in that fixed order.
inline chroma::FiniteGraph graph_from_mask(int n, unsigned long long mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1ULL) edges.emplace_back(u, v);
    }
  }
  return chroma::FiniteGraph(n, edges);
}

inline unsigned long long pair_count(int n) {
  return static_cast<unsigned long long>(n) * (n - 1) / 2;
}

inline chroma::FiniteGraph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return chroma::FiniteGraph(n, edges);
}

// Random graph whose maximum degree stays at or below `max_degree`.
inline chroma::FiniteGraph random_graph_bounded_degree(std::mt19937& rng, int n,
                                                       int max_degree, int attempts) {
  std::vector<int> degree(n, 0);
  std::set<std::pair<int, int>> edges;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < attempts; ++t) {
    int u = pick(rng);
    int v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (edges.contains({u, v})) continue;
    if (degree[u] >= max_degree || degree[v] >= max_degree) continue;
    edges.insert({u, v});
    ++degree[u];
    ++degree[v];
  }
  return chroma::FiniteGraph(n, {edges.begin(), edges.end()});
}

inline chroma::FunctionFamily random_family(std::mt19937& rng, int n, int function_count) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<std::vector<int>> functions(function_count, std::vector<int>(n));
  for (auto& f : functions) {
    for (int v = 0; v < n; ++v) f[v] = pick(rng);
  }
  return chroma::FunctionFamily(n, std::move(functions));
}

// k-th string of the length-then-lexicographic enumeration; test-side twin
// of the canonical thread construction.
inline std::string length_lex_string(int k) {
  if (k == 0) return "";
  int len = 0;
  while ((1 << (len + 1)) - 1 <= k) ++len;
  const int offset = k - ((1 << len) - 1);
  std::string s(len, '0');
  for (int i = 0; i < len; ++i) {
    if (offset & (1 << (len - 1 - i))) s[i] = '1';
  }
  return s;
}

// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
inline chroma::FiniteGraph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return chroma::FiniteGraph(10, edges);
}

}  // namespace testsupport
