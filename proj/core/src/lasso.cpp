#include "chroma/lasso.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chroma {

namespace {

void check_symbols(int alphabet, const std::vector<int>& seq, const char* what) {
  for (int s : seq) {
    if (s < 0 || s >= alphabet) {
      throw std::invalid_argument(std::string(what) + " symbol " + std::to_string(s) +
                                  " out of range for alphabet " + std::to_string(alphabet));
    }
  }
}

}  // namespace

Lasso::Lasso(int alphabet, std::vector<int> prefix, std::vector<int> cycle)
    : alphabet_(alphabet), prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (alphabet_ < 1) throw std::invalid_argument("alphabet must be at least 1");
  if (cycle_.empty()) throw std::invalid_argument("lasso cycle must be nonempty");
  check_symbols(alphabet_, prefix_, "prefix");
  check_symbols(alphabet_, cycle_, "cycle");

  // Reduce the cycle to its primitive root.
  const std::size_t n = cycle_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = cycle_[i] == cycle_[i - d];
    if (periodic) {
      cycle_.resize(d);
      break;
    }
  }

  // Absorb the prefix tail into the cycle: dropping the last prefix symbol
  // preserves the denoted sequence exactly when that symbol matches the
  // cycle's last symbol, with the cycle rotated right once to compensate.
  while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
    prefix_.pop_back();
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
  }
}

int Lasso::entry(long long i) const {
  if (i < 0) throw std::invalid_argument("sequence index must be nonnegative");
  const long long p = static_cast<long long>(prefix_.size());
  if (i < p) return prefix_[static_cast<std::size_t>(i)];
  return cycle_[static_cast<std::size_t>((i - p) % static_cast<long long>(cycle_.size()))];
}

Lasso Lasso::shift() const {
  if (!prefix_.empty()) {
    return Lasso(alphabet_, std::vector<int>(prefix_.begin() + 1, prefix_.end()), cycle_);
  }
  std::vector<int> rotated(cycle_.begin() + 1, cycle_.end());
  rotated.push_back(cycle_.front());
  return Lasso(alphabet_, {}, std::move(rotated));
}

std::optional<int> Lasso::leading_run(const std::set<int>& symbols) const {
  const int limit = static_cast<int>(prefix_.size() + cycle_.size());
  for (int i = 0; i < limit; ++i) {
    if (!symbols.contains(entry(i))) return i;
  }
  return std::nullopt;  // prefix and one full cycle inside the set
}

std::optional<int> Lasso::tail_index(int symbol, TailMode mode) const {
  if (symbol < 0 || symbol >= alphabet_) {
    throw std::invalid_argument("symbol " + std::to_string(symbol) + " out of range for alphabet " +
                                std::to_string(alphabet_));
  }
  const auto settled = [&](int s) { return mode == TailMode::all_equal ? s == symbol : s != symbol; };
  for (int s : cycle_) {
    if (!settled(s)) return std::nullopt;
  }
  std::size_t k = prefix_.size();
  while (k > 0 && settled(prefix_[k - 1])) --k;
  return static_cast<int>(k);
}

bool eventually_equal(const Lasso& a, const Lasso& b) {
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("alphabet mismatch");
  const long long start =
      static_cast<long long>(std::max(a.prefix().size(), b.prefix().size()));
  const long long window = std::lcm(static_cast<long long>(a.cycle().size()),
                                    static_cast<long long>(b.cycle().size()));
  for (long long i = start; i < start + window; ++i) {
    if (a.entry(i) != b.entry(i)) return false;
  }
  return true;
}

}  // namespace chroma
