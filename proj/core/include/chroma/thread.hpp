#pragma once

#include <string>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/lasso.hpp"

namespace chroma {

/// Depth-bounded table of binary strings, one row of each length
/// 0..depth-1. Construction enforces the shape only; use validate_thread
/// for the domination report.
class DenseThread {
 public:
  explicit DenseThread(std::vector<std::string> rows);

  int depth() const { return static_cast<int>(rows_.size()); }
  const std::string& row(int k) const { return rows_[k]; }
  const std::vector<std::string>& rows() const { return rows_; }

 private:
  std::vector<std::string> rows_;
};

/// Thread whose row k is the k-th entry of the length-then-lexicographic
/// enumeration of binary strings, padded with zeroes to length k.
DenseThread canonical_thread(int depth);

struct ThreadReport {
  std::vector<std::string> structural_errors;
  /// Strings of length < depth that no row extends, in length-lex order.
  /// A finite table never refutes density outright; this records what a
  /// deeper table would still have to cover.
  std::vector<std::string> undominated;

  bool structurally_valid() const { return structural_errors.empty(); }
};

ThreadReport validate_thread(const std::vector<std::string>& rows);

/// Graph on all binary strings of length k, encoded as integers with
/// coordinate 0 the most significant bit. Two strings are joined when they
/// extend some row s_j with opposite bits at position j and agree beyond
/// it; every level of a well-formed thread is a tree on 2^k vertices.
struct LevelGraph {
  int k = 0;
  FiniteGraph graph;

  std::string label(int v) const;  // k-bit string of vertex v
};

LevelGraph level_graph(const DenseThread& t, int k);  // requires k < t.depth()

/// Eventual-equality adjacency on binary lassos: x != y and the denoted
/// sequences agree from some index on. Requires alphabet 2.
bool g1_adjacent(const Lasso& x, const Lasso& y);

/// Adjacent pair at level depth+1 sharing its depth-long prefix (row s_d):
/// the two one-bit extensions of s_d. Forced monochromatic under every
/// colouring whose classes are determined by depth-d prefixes.
struct LevelObstruction {
  int depth = 0;
  int level = 0;
  int vertex_a = 0;
  int vertex_b = 0;
  std::string bits_a;
  std::string bits_b;
  std::string shared_prefix;
};

LevelObstruction g0_obstruction(const DenseThread& t, int d);  // requires d + 1 < t.depth()

/// Adjacent binary-lasso pair sharing its depth-d prefix: the all-zero
/// sequence and the sequence with a single 1 at position d.
struct TailObstruction {
  int depth;
  Lasso x;
  Lasso y;
};

TailObstruction g1_obstruction(int d);

}  // namespace chroma
