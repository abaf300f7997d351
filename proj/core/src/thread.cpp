#include "chroma/thread.hpp"

#include <stdexcept>

namespace chroma {

DenseThread::DenseThread(std::vector<std::string> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("thread needs at least one row");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k].size() != k) {
      throw std::invalid_argument("row " + std::to_string(k) + " has length " +
                                  std::to_string(rows_[k].size()) + ", expected " +
                                  std::to_string(k));
    }
    for (char ch : rows_[k]) {
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("row " + std::to_string(k) + " is not a binary string");
      }
    }
  }
}

namespace {

// k-th string of the length-then-lexicographic enumeration of binary
// strings: "", "0", "1", "00", "01", ...
std::string length_lex(int k) {
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

std::string bits_of(int value, int len) {
  std::string s(len, '0');
  for (int i = 0; i < len; ++i) {
    if (value & (1 << (len - 1 - i))) s[i] = '1';
  }
  return s;
}

}  // namespace

DenseThread canonical_thread(int depth) {
  if (depth < 1) throw std::invalid_argument("thread depth must be at least 1");
  std::vector<std::string> rows;
  rows.reserve(depth);
  for (int k = 0; k < depth; ++k) {
    std::string row = length_lex(k);  // |length_lex(k)| <= k always
    row.append(k - row.size(), '0');
    rows.push_back(std::move(row));
  }
  return DenseThread(std::move(rows));
}

ThreadReport validate_thread(const std::vector<std::string>& rows) {
  ThreadReport report;
  const int depth = static_cast<int>(rows.size());
  if (depth == 0) {
    report.structural_errors.push_back("thread has no rows");
    return report;
  }
  for (int k = 0; k < depth; ++k) {
    if (static_cast<int>(rows[k].size()) != k) {
      report.structural_errors.push_back("row " + std::to_string(k) + " has length " +
                                         std::to_string(rows[k].size()) + ", expected " +
                                         std::to_string(k));
      continue;
    }
    for (char ch : rows[k]) {
      if (ch != '0' && ch != '1') {
        report.structural_errors.push_back("row " + std::to_string(k) +
                                           " is not a binary string");
        break;
      }
    }
  }
  for (int len = 0; len < depth; ++len) {
    for (int value = 0; value < (1 << len); ++value) {
      const std::string candidate = bits_of(value, len);
      bool dominated = false;
      for (int k = len; k < depth && !dominated; ++k) {
        dominated = static_cast<int>(rows[k].size()) == k &&
                    rows[k].compare(0, len, candidate) == 0;
      }
      if (!dominated) report.undominated.push_back(candidate);
    }
  }
  return report;
}

std::string LevelGraph::label(int v) const { return bits_of(v, k); }

LevelGraph level_graph(const DenseThread& t, int k) {
  if (k < 0 || k >= t.depth()) {
    throw std::invalid_argument("level " + std::to_string(k) + " needs a thread of depth > " +
                                std::to_string(k));
  }
  if (k > 22) throw std::invalid_argument("level graph on 2^" + std::to_string(k) +
                                          " vertices is too large to materialize");
  std::vector<std::pair<int, int>> edges;
  edges.reserve((1 << k) - 1);
  for (int j = 0; j < k; ++j) {
    int prefix_value = 0;
    for (char ch : t.row(j)) prefix_value = prefix_value * 2 + (ch - '0');
    const int tail_len = k - j - 1;
    const int base = prefix_value << (k - j);
    for (int tail = 0; tail < (1 << tail_len); ++tail) {
      edges.emplace_back(base | tail, base | (1 << tail_len) | tail);
    }
  }
  return LevelGraph{k, FiniteGraph(1 << k, edges)};
}

bool g1_adjacent(const Lasso& x, const Lasso& y) {
  if (x.alphabet() != 2 || y.alphabet() != 2) {
    throw std::invalid_argument("eventual-equality adjacency needs alphabet 2");
  }
  return !(x == y) && eventually_equal(x, y);
}

LevelObstruction g0_obstruction(const DenseThread& t, int d) {
  if (d < 0) throw std::invalid_argument("obstruction depth must be nonnegative");
  if (d + 1 >= t.depth()) {
    throw std::invalid_argument("thread of depth " + std::to_string(t.depth()) +
                                " is too shallow for obstruction depth " + std::to_string(d));
  }
  const std::string& shared = t.row(d);
  int base = 0;
  for (char ch : shared) base = base * 2 + (ch - '0');

  LevelObstruction witness;
  witness.depth = d;
  witness.level = d + 1;
  witness.vertex_a = base << 1;
  witness.vertex_b = (base << 1) | 1;
  witness.bits_a = shared + '0';
  witness.bits_b = shared + '1';
  witness.shared_prefix = shared;
  return witness;
}

TailObstruction g1_obstruction(int d) {
  if (d < 0) throw std::invalid_argument("obstruction depth must be nonnegative");
  std::vector<int> bumped(d, 0);
  bumped.push_back(1);
  return TailObstruction{d, Lasso(2, {}, {0}), Lasso(2, std::move(bumped), {0})};
}

}  // namespace chroma
