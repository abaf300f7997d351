#pragma once

#include <optional>
#include <set>
#include <vector>

namespace chroma {

/// Which tail condition tail_index() waits for.
enum class TailMode { all_equal, none_equal };

/// Eventually periodic sequence over the alphabet {0, ..., alphabet-1},
/// stored as a finite prefix followed by a repeating cycle. Construction
/// normalizes to canonical form (primitive cycle, fully absorbed prefix),
/// so structural equality coincides with equality of the denoted infinite
/// sequences.
class Lasso {
 public:
  Lasso(int alphabet, std::vector<int> prefix, std::vector<int> cycle);

  int alphabet() const { return alphabet_; }
  const std::vector<int>& prefix() const { return prefix_; }
  const std::vector<int>& cycle() const { return cycle_; }

  /// Symbol at position i of the denoted sequence, i >= 0.
  int entry(long long i) const;

  /// The sequence with its first symbol dropped.
  Lasso shift() const;

  /// Length of the initial run of symbols drawn from `symbols`, or nullopt
  /// when the whole sequence stays inside the set.
  std::optional<int> leading_run(const std::set<int>& symbols) const;

  /// Least k such that from position k on every entry is equal (all_equal)
  /// or unequal (none_equal) to `symbol`; nullopt when the cycle content
  /// makes the condition unreachable.
  std::optional<int> tail_index(int symbol, TailMode mode) const;

  bool operator==(const Lasso&) const = default;

 private:
  int alphabet_;
  std::vector<int> prefix_;
  std::vector<int> cycle_;
};

/// True when the two sequences agree from some position on. Decided by
/// comparing one lcm-of-cycle-lengths window past both prefixes.
/// Throws on alphabet mismatch.
bool eventually_equal(const Lasso& a, const Lasso& b);

}  // namespace chroma
