// End-to-end property suite. Each check prints one PASS/FAIL line; the
// process exits nonzero if any check fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "chroma/constructive.hpp"
#include "chroma/function_family.hpp"
#include "chroma/graph.hpp"
#include "chroma/io.hpp"
#include "chroma/shift_coloring.hpp"
#include "chroma/solver.hpp"
#include "chroma/thread.hpp"
#include "support.hpp"

namespace {

using namespace chroma;
using testsupport::graph_from_mask;
using testsupport::pair_count;
using testsupport::petersen_graph;
using testsupport::random_family;
using testsupport::random_graph;
using testsupport::random_graph_bounded_degree;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Shift-colouring properness: exhaustive over alphabets 2..5, canonical
// lassos with |prefix| <= 4 and |cycle| <= 4, under 60 seconds.
Outcome check_shift_coloring() {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  long long lassos = 0;
  long long pairs = 0;
  for (int alphabet = 2; alphabet <= 5; ++alphabet) {
    const SweepResult sweep = shift3_sweep(alphabet, 4, 4);
    lassos += sweep.lassos;
    pairs += sweep.pairs;
    if (sweep.violations != 0) {
      outcome.fail("alphabet " + std::to_string(alphabet) + ": " +
                   std::to_string(sweep.violations) + " violations, first at " +
                   io::format_lasso(sweep.first_violation->first));
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60.0) outcome.fail("exceeded the 60 s budget");
  if (outcome.pass) {
    outcome.detail = std::to_string(lassos) + " lassos, " + std::to_string(pairs) +
                     " shift pairs, 0 violations, " + std::to_string(elapsed).substr(0, 4) + "s";
  }
  return outcome;
}

// Transfer pipeline: 500 random single-function families on <= 50 vertices give
// proper colourings with <= 3 colours; the solver confirms chi <= 3 at <= 20.
Outcome check_transfer_pipeline() {
  Outcome outcome;
  std::mt19937 rng(1002);
  std::uniform_int_distribution<int> size(1, 50);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = size(rng);
    const FunctionFamily family = random_family(rng, n, 1);
    const FiniteGraph g = generate_graph(family);
    const Coloring c = transfer3_color(family);
    if (!is_proper(g, c)) outcome.fail("improper output at trial " + std::to_string(trial));
    if (c.distinct() > 3) outcome.fail("more than 3 colours at trial " + std::to_string(trial));
    if (n <= 20 && chromatic_number(g).chi > 3) {
      outcome.fail("solver found chi > 3 at trial " + std::to_string(trial));
    }
  }
  if (outcome.pass) outcome.detail = "500 families proper with <= 3 colours";
  return outcome;
}

// Degree bound: 500 random graphs with max degree <= 6; the peeling colouring
// is proper, uses at most max_degree + 1 colours, and every peel is a maximal
// independent set of what remained.
Outcome check_degree_bound() {
  Outcome outcome;
  std::mt19937 rng(1003);
  std::uniform_int_distribution<int> size(1, 40);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = size(rng);
    const FiniteGraph g = random_graph_bounded_degree(rng, n, 6, 4 * n);
    const Coloring c = mis_peel_color(g);
    if (!is_proper(g, c)) outcome.fail("improper output at trial " + std::to_string(trial));
    if (c.distinct() > g.max_degree() + 1) {
      outcome.fail("colour budget exceeded at trial " + std::to_string(trial));
    }
    for (int v = 0; v < n && outcome.pass; ++v) {
      for (int round = 0; round < c[v]; ++round) {
        bool blocked = false;
        for (int w : g.neighbors(v)) blocked = blocked || c[w] == round;
        if (!blocked) {
          outcome.fail("peel " + std::to_string(round) + " not maximal at trial " +
                       std::to_string(trial));
          break;
        }
      }
    }
  }
  if (outcome.pass) outcome.detail = "500 graphs, Delta <= 6, peels maximal";
  return outcome;
}

// Palette optimality: every graph on <= 5 vertices plus 300 random graphs on
// <= 12 vertices is coloured properly with exactly chromatic_number colours,
// all within 5 minutes.
Outcome check_palette_optimality() {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  long long graphs = 0;
  const auto examine = [&](const FiniteGraph& g) {
    const Coloring c = palette_color(g, component_order(g));
    ++graphs;
    if (g.vertex_count() > 0 && !is_proper(g, c)) {
      outcome.fail("improper output on graph " + std::to_string(graphs));
    }
    if (c.distinct() != chromatic_number(g).chi) {
      outcome.fail("colour count misses chi on graph " + std::to_string(graphs));
    }
  };
  for (int n = 0; n <= 5; ++n) {
    for (unsigned long long mask = 0; mask < (1ULL << pair_count(n)); ++mask) {
      examine(graph_from_mask(n, mask));
    }
  }
  std::mt19937 rng(1004);
  std::uniform_int_distribution<int> size(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    examine(random_graph(rng, size(rng), 0.4));
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 300.0) outcome.fail("exceeded the 5 min budget");
  if (outcome.pass) {
    outcome.detail = std::to_string(graphs) + " graphs at exactly chi colours, " +
                     std::to_string(elapsed).substr(0, 4) + "s";
  }
  return outcome;
}

// 2n+1 shadow: 300 random families with n in {1,2,3} functions on <= 15
// vertices generate graphs with chi <= 2n+1.
Outcome check_2n_plus_1() {
  Outcome outcome;
  std::mt19937 rng(1005);
  std::uniform_int_distribution<int> size(1, 15);
  std::uniform_int_distribution<int> functions(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = size(rng);
    const int k = functions(rng);
    const FiniteGraph g = generate_graph(random_family(rng, n, k));
    if (chromatic_number(g).chi > 2 * k + 1) {
      outcome.fail("chi exceeds 2n+1 at trial " + std::to_string(trial));
    }
  }
  if (outcome.pass) outcome.detail = "300 families, chi <= 2n+1 throughout";
  return outcome;
}

// Level structure: canonical plus 3 random threads have tree levels with
// 2^k - 1 edges and chi = 2 for k = 1..10; obstruction witnesses are valid
// for every depth d <= 8 in both adjacency families.
Outcome check_level_structure() {
  Outcome outcome;
  std::mt19937 rng(1006);
  std::vector<DenseThread> threads;
  threads.push_back(canonical_thread(11));
  for (int t = 0; t < 3; ++t) {
    std::vector<std::string> rows;
    for (int k = 0; k < 11; ++k) {
      std::string row(k, '0');
      for (char& ch : row) ch = rng() % 2 ? '1' : '0';
      rows.push_back(std::move(row));
    }
    threads.emplace_back(std::move(rows));
  }
  for (std::size_t t = 0; t < threads.size() && outcome.pass; ++t) {
    for (int k = 1; k <= 10; ++k) {
      const LevelGraph level = level_graph(threads[t], k);
      const StructureReport structure = analyze_structure(level.graph);
      if (level.graph.edge_count() != (1 << k) - 1 || !structure.acyclic ||
          !structure.connected) {
        outcome.fail("level " + std::to_string(k) + " of thread " + std::to_string(t) +
                     " is not a spanning tree");
      }
      if (chromatic_number(level.graph).chi != 2) {
        outcome.fail("level " + std::to_string(k) + " of thread " + std::to_string(t) +
                     " is not 2-chromatic");
      }
    }
    for (int d = 0; d <= 8; ++d) {
      const LevelObstruction witness = g0_obstruction(threads[t], d);
      const LevelGraph level = level_graph(threads[t], witness.level);
      const bool adjacent = level.graph.adjacent(witness.vertex_a, witness.vertex_b);
      const bool shares = witness.bits_a.substr(0, d) == witness.bits_b.substr(0, d);
      if (!adjacent || !shares) {
        outcome.fail("bad g0 witness at depth " + std::to_string(d) + " on thread " +
                     std::to_string(t));
      }
    }
  }
  for (int d = 0; d <= 8 && outcome.pass; ++d) {
    const TailObstruction witness = g1_obstruction(d);
    bool shares = true;
    for (int i = 0; i < d; ++i) shares = shares && witness.x.entry(i) == witness.y.entry(i);
    if (!g1_adjacent(witness.x, witness.y) || !shares) {
      outcome.fail("bad g1 witness at depth " + std::to_string(d));
    }
  }
  if (outcome.pass) outcome.detail = "4 threads, levels 1..10, witnesses to depth 8";
  return outcome;
}

// Solver soundness: exact agreement with brute force on all 4-vertex graphs
// and 200 random graphs on 5..8 vertices; witnesses proper; Petersen at 3.
Outcome check_solver_soundness() {
  Outcome outcome;
  long long graphs = 0;
  const auto examine = [&](const FiniteGraph& g) {
    ++graphs;
    const ChiResult result = chromatic_number(g);
    if (result.chi != brute_force_chromatic(g)) {
      outcome.fail("solver disagrees with brute force on graph " + std::to_string(graphs));
    }
    if (!is_proper(g, result.witness) || result.witness.distinct() != result.chi) {
      outcome.fail("bad witness on graph " + std::to_string(graphs));
    }
  };
  for (unsigned long long mask = 0; mask < (1ULL << pair_count(4)); ++mask) {
    examine(graph_from_mask(4, mask));
  }
  std::mt19937 rng(1007);
  std::uniform_int_distribution<int> size(5, 8);
  for (int trial = 0; trial < 200; ++trial) {
    examine(random_graph(rng, size(rng), 0.5));
  }
  if (chromatic_number(petersen_graph()).chi != 3) outcome.fail("Petersen chi is not 3");
  if (outcome.pass) {
    outcome.detail = std::to_string(graphs) + " graphs against brute force, Petersen at 3";
  }
  return outcome;
}

// Uniformisation and covering: 200 random families yield functional
// selections contained in the moved relation with the exact domain; the
// covering family regenerates every graph on up to 7 vertices.
Outcome check_uniformisation() {
  Outcome outcome;
  std::mt19937 rng(1008);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_int_distribution<int> functions(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    const FunctionFamily family = random_family(rng, n, functions(rng));
    const auto pairs = uniformize(family);
    std::vector<char> in_domain(n, 0);
    for (auto [x, y] : pairs) {
      if (in_domain[x]) outcome.fail("double selection at trial " + std::to_string(trial));
      in_domain[x] = 1;
      bool witnessed = false;
      for (const auto& f : family.functions) witnessed = witnessed || f[x] == y;
      if (!witnessed || x == y) {
        outcome.fail("selection outside the relation at trial " + std::to_string(trial));
      }
    }
    for (int x = 0; x < n; ++x) {
      bool moved = false;
      for (const auto& f : family.functions) moved = moved || f[x] != x;
      if (moved != static_cast<bool>(in_domain[x])) {
        outcome.fail("domain mismatch at trial " + std::to_string(trial));
      }
    }
  }
  long long graphs = 0;
  for (int n = 0; n <= 7 && outcome.pass; ++n) {
    for (unsigned long long mask = 0; mask < (1ULL << pair_count(n)); ++mask) {
      const FiniteGraph g = graph_from_mask(n, mask);
      ++graphs;
      if (!(generate_graph(covering_family(g)) == g)) {
        outcome.fail("covering round-trip failed on " + std::to_string(n) + " vertices, mask " +
                     std::to_string(mask));
        break;
      }
    }
  }
  if (outcome.pass) {
    outcome.detail = "200 families, round trip over " + std::to_string(graphs) + " graphs";
  }
  return outcome;
}

}  // namespace

int main() {
  struct Check {
    const char* name;
    Outcome (*run)();
  };
  const Check checks[] = {
      {"shift-colouring exhaustive sweep", check_shift_coloring},
      {"transfer pipeline", check_transfer_pipeline},
      {"degree bound via peeling", check_degree_bound},
      {"palette optimality", check_palette_optimality},
      {"2n+1 bound shadow", check_2n_plus_1},
      {"level-graph structure", check_level_structure},
      {"solver soundness", check_solver_soundness},
      {"uniformisation and covering", check_uniformisation},
  };

  int failed = 0;
  int index = 0;
  for (const Check& check : checks) {
    ++index;
    const Outcome outcome = check.run();
    if (!outcome.pass) ++failed;
    std::printf("[%d/8] %s: %s (%s)\n", index, check.name, outcome.pass ? "PASS" : "FAIL",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("ACCEPTANCE: %d/8 passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
