#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/function_family.hpp"
#include "chroma/graph.hpp"
#include "chroma/lasso.hpp"
#include "chroma/thread.hpp"

namespace chroma::io {

/// Input rejected; the message names the offending token or line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph files: one `p edge <n> <m>` header, `e <u> <v>` lines with 1-based
// labels, `c` comment lines ignored.
FiniteGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const FiniteGraph& g,
                 const std::vector<std::string>& comments = {});

// Function-family files: `f <i> <u> <v>` lines meaning function i maps u to
// v, everything 1-based; every (i, u) pair must appear exactly once.
FunctionFamily read_family(std::istream& in);
void write_family(std::ostream& out, const FunctionFamily& family);

// Colouring files: `<vertex> <colour>` lines, vertices 1-based and each
// present exactly once, colours 0-based.
Coloring read_coloring(std::istream& in, int vertex_count);
void write_coloring(std::ostream& out, const Coloring& c);

// Thread files: line k holds row k (line 0 is empty).
std::vector<std::string> read_thread_rows(std::istream& in);
void write_thread(std::ostream& out, const DenseThread& t);

// Lasso text: `<alphabet>:<p1,p2,...;c1,c2,...>` with decimal symbols;
// the prefix may be empty, the cycle may not.
Lasso parse_lasso(const std::string& text);
std::string format_lasso(const Lasso& x);

// Level graphs as graph files with `c vertex <id> = <bits>` label comments.
void write_level_graph(std::ostream& out, const LevelGraph& lg);

}  // namespace chroma::io
