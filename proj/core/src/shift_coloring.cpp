#include "chroma/shift_coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "chroma/solver.hpp"

namespace chroma {

ShiftCase classify_shift_case(const Lasso& x) {
  if (x.alphabet() < 2) throw std::invalid_argument("shift colouring needs alphabet >= 2");
  if (x.alphabet() == 2) return ShiftCase::binary;
  const int top = x.alphabet() - 1;
  bool has_top = false;
  bool has_other = false;
  for (int s : x.cycle()) {
    (s == top ? has_top : has_other) = true;
  }
  if (has_top && has_other) return ShiftCase::mixed_tail;
  return has_top ? ShiftCase::all_top_tail : ShiftCase::no_top_tail;
}

int shift3_color(const Lasso& x) {
  const int alphabet = x.alphabet();
  if (alphabet < 2) throw std::invalid_argument("shift colouring needs alphabet >= 2");

  if (alphabet == 2) {
    const auto zeroes = x.leading_run({0});
    if (zeroes && *zeroes % 2 == 1) return 0;
    const auto ones = x.leading_run({1});
    if (ones && *ones % 2 == 1) return 1;
    return 2;
  }

  const int top = alphabet - 1;
  switch (classify_shift_case(x)) {
    case ShiftCase::mixed_tail: {
      const auto top_run = x.leading_run({top});
      if (top_run && *top_run % 2 == 1) return 0;
      std::set<int> others;
      for (int s = 0; s < top; ++s) others.insert(s);
      const auto other_run = x.leading_run(others);
      if (other_run && *other_run % 2 == 1) return 1;
      return 2;
    }
    case ShiftCase::all_top_tail:
      return *x.tail_index(top, TailMode::all_equal) % 2;
    case ShiftCase::no_top_tail: {
      // All top symbols sit in the prefix, so the shifted sequence lives
      // over the smaller alphabet outright.
      const int k = *x.tail_index(top, TailMode::none_equal);
      std::vector<int> dropped(x.prefix().begin() + k, x.prefix().end());
      const Lasso inner(alphabet - 1, std::move(dropped), x.cycle());
      return (shift3_color(inner) + k) % 3;
    }
    case ShiftCase::binary:
      break;  // handled above
  }
  return 2;
}

Lasso hom_to_shift(const FunctionFamily& family, const Coloring& c, int v) {
  if (family.function_count() != 1) {
    throw std::invalid_argument("orbit lasso needs a family with exactly one function");
  }
  const FiniteGraph g = generate_graph(family);
  if (!is_proper(g, c)) {
    throw std::invalid_argument("colouring must be proper for the generated graph");
  }
  if (v < 0 || v >= family.vertex_count) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }

  const auto& f = family.functions[0];
  const int n = family.vertex_count;
  std::vector<int> first_seen(n, -1);
  std::vector<int> orbit;
  int x = v;
  while (first_seen[x] == -1) {
    first_seen[x] = static_cast<int>(orbit.size());
    orbit.push_back(x);
    x = f[x];
  }
  const int cycle_start = first_seen[x];

  const int colours = 1 + *std::max_element(c.colours.begin(), c.colours.end());
  const int alphabet = std::max(2, colours);
  std::vector<int> prefix;
  std::vector<int> cycle;
  for (int i = 0; i < cycle_start; ++i) prefix.push_back(c[orbit[i]]);
  for (int i = cycle_start; i < static_cast<int>(orbit.size()); ++i) cycle.push_back(c[orbit[i]]);
  return Lasso(alphabet, std::move(prefix), std::move(cycle));
}

Coloring transfer3_color(const FunctionFamily& family) {
  if (family.function_count() != 1) {
    throw std::invalid_argument("transfer colouring needs a family with exactly one function");
  }
  const FiniteGraph g = generate_graph(family);
  const Coloring base = greedy_coloring(g);
  Coloring out{std::vector<int>(family.vertex_count, 0)};
  for (int v = 0; v < family.vertex_count; ++v) {
    out.colours[v] = shift3_color(hom_to_shift(family, base, v));
  }
  return out;
}

SweepResult shift3_sweep(int alphabet, int max_prefix, int max_cycle) {
  if (alphabet < 2) throw std::invalid_argument("sweep needs alphabet >= 2");
  if (max_prefix < 0) throw std::invalid_argument("max prefix length must be nonnegative");
  if (max_cycle < 1) throw std::invalid_argument("max cycle length must be positive");

  SweepResult result;
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
        const Lasso x(alphabet, prefix, cycle);
        // Normalization only shrinks, so unchanged sizes mean the raw form
        // was already canonical; anything else is a duplicate of a smaller
        // form and skipped.
        if (static_cast<int>(x.prefix().size()) != plen ||
            static_cast<int>(x.cycle().size()) != clen) {
          continue;
        }
        ++result.lassos;
        const Lasso y = x.shift();
        if (y == x) continue;
        ++result.pairs;
        if (shift3_color(x) == shift3_color(y)) {
          ++result.violations;
          if (!result.first_violation) result.first_violation = {x, y};
        }
      } while (advance());
    }
  }
  return result;
}

}  // namespace chroma
