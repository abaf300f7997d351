#pragma once

#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"

namespace chroma {

/// Repeatedly peel a greedy maximal independent set (ascending vertex
/// order) off the remaining graph and give each peel the next colour.
/// Uses at most max_degree + 1 colours.
Coloring mis_peel_color(const FiniteGraph& g);

/// Distance parity from each component's transversal vertex. The graph
/// must be acyclic and `transversal` must hold exactly one vertex per
/// component; both are checked.
Coloring two_color_acyclic(const FiniteGraph& g, const std::vector<int>& transversal);

/// Optimal colouring built vertex by vertex along the component order:
/// each vertex takes the least colour that still extends to a full proper
/// chromatic_number(g)-colouring of its component (a pinned solver query).
/// Uses exactly chromatic_number(g) distinct colours.
Coloring palette_color(const FiniteGraph& g, const ComponentOrder& co);

}  // namespace chroma
