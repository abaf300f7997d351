#pragma once

#include <optional>
#include <utility>

#include "chroma/coloring.hpp"
#include "chroma/function_family.hpp"
#include "chroma/lasso.hpp"

namespace chroma {

/// Branch of the recursive shift colouring a lasso falls into, determined
/// by the cycle's content relative to the top symbol. Shift-adjacent
/// sequences always land in the same branch.
enum class ShiftCase {
  binary,        // alphabet 2
  mixed_tail,    // cycle contains the top symbol and others
  all_top_tail,  // cycle is constantly the top symbol
  no_top_tail,   // cycle avoids the top symbol
};

ShiftCase classify_shift_case(const Lasso& x);

/// Proper 3-colouring of the shift adjacency on eventually periodic
/// sequences, recursive on the alphabet size:
///   alphabet 2      parity of the leading 0-run, then of the leading 1-run
///   mixed_tail      same parity rules with {top} / {non-top} runs
///   all_top_tail    parity of the index where the constant tail starts
///   no_top_tail     recurse on the shifted sequence over the smaller
///                   alphabet and add the shift distance mod 3
/// Requires alphabet >= 2.
int shift3_color(const Lasso& x);

/// The orbit-colour sequence (c(v), c(f(v)), c(f^2(v)), ...) as a lasso.
/// `family` must hold exactly one function and `c` must be proper for the
/// generated graph. The lasso alphabet is the colour count, at least 2.
Lasso hom_to_shift(const FunctionFamily& family, const Coloring& c, int v);

/// Proper colouring of a single-function graph with at most 3 colours:
/// greedy-colour the graph, send every vertex to its orbit-colour lasso,
/// and colour the image with shift3_color.
Coloring transfer3_color(const FunctionFamily& family);

struct SweepResult {
  long long lassos = 0;      // canonical lassos enumerated
  long long pairs = 0;       // shift-adjacent pairs checked
  long long violations = 0;  // pairs with equal colours
  std::optional<std::pair<Lasso, Lasso>> first_violation;
};

/// Exhaustive properness check of shift3_color over every canonical lasso
/// with the given alphabet and size bounds.
SweepResult shift3_sweep(int alphabet, int max_prefix, int max_cycle);

}  // namespace chroma
