#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"

namespace chroma {

/// True when no edge of g has equal endpoint colours. The colouring must be
/// total on g's vertices with nonnegative entries.
bool is_proper(const FiniteGraph& g, const Coloring& c);

/// First-fit colouring in ascending vertex order.
Coloring greedy_coloring(const FiniteGraph& g);

/// Exact k-colourability with optional pinned vertices. `pinned` is either
/// empty or holds one entry per vertex: -1 for free, otherwise a colour
/// below k. Deterministic backtracking, most-saturated vertex first, ties
/// and colours in ascending order.
std::optional<Coloring> solve_k_coloring(const FiniteGraph& g, int k,
                                         const std::vector<int>& pinned = {});

struct ChiResult {
  int chi = 0;
  Coloring witness;                        // proper, exactly chi distinct colours
  std::optional<std::vector<int>> clique;  // lower-bound certificate of size chi, when found
};

/// Exact chromatic number, bracketed between a greedy clique lower bound and
/// the greedy colouring upper bound; colour symmetry broken by pinning
/// vertex 0 to colour 0.
ChiResult chromatic_number(const FiniteGraph& g);

/// Minimal k found by enumerating all k^n assignments, k ascending.
/// Intentionally naive cross-check; vertex_count must be at most 8.
int brute_force_chromatic(const FiniteGraph& g);

struct StructureReport {
  bool acyclic = true;
  bool bipartite = true;
  bool connected = true;
  int max_degree = 0;
  int degeneracy = 0;
};

/// Traversal-based structure summary; degeneracy by minimum-degree peeling.
StructureReport analyze_structure(const FiniteGraph& g);

/// The k-colourability instance as DIMACS CNF (direct encoding: one variable
/// per vertex/colour pair). Debugging aid for external validation.
std::string to_dimacs_cnf(const FiniteGraph& g, int k,
                          const std::vector<int>& pinned = {});

}  // namespace chroma
