// Command-line workbench over the chroma core library: thread generation
// and validation, level graphs, exact chromatic numbers, the constructive
// colouring procedures, and obstruction witnesses.
//
// Exit codes: 0 success, 1 failed verdict (improper colouring, violated
// property, oracle disagreement), 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chroma/constructive.hpp"
#include "chroma/function_family.hpp"
#include "chroma/graph.hpp"
#include "chroma/io.hpp"
#include "chroma/lasso.hpp"
#include "chroma/shift_coloring.hpp"
#include "chroma/solver.hpp"
#include "chroma/thread.hpp"

namespace {

using nlohmann::json;

chroma::FiniteGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw chroma::io::ParseError("cannot open file '" + path + "'");
  return chroma::io::read_graph(in);
}

chroma::FunctionFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw chroma::io::ParseError("cannot open file '" + path + "'");
  return chroma::io::read_family(in);
}

chroma::Coloring load_coloring(const std::string& path, int vertex_count) {
  std::ifstream in(path);
  if (!in) throw chroma::io::ParseError("cannot open file '" + path + "'");
  return chroma::io::read_coloring(in, vertex_count);
}

std::vector<std::string> load_thread_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw chroma::io::ParseError("cannot open file '" + path + "'");
  return chroma::io::read_thread_rows(in);
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> vertices;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) throw chroma::io::ParseError("empty vertex token in '" + text + "'");
    std::size_t consumed = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &consumed);
    } catch (const std::exception&) {
      consumed = std::string::npos;
    }
    if (consumed != token.size() || value < 1) {
      throw chroma::io::ParseError("expected a 1-based vertex, got '" + token + "'");
    }
    vertices.push_back(static_cast<int>(value) - 1);
  }
  return vertices;
}

struct ThreadGenOptions {
  int depth = 1;
  bool as_json = false;
};

int run_thread_gen(const ThreadGenOptions& opt) {
  const chroma::DenseThread t = chroma::canonical_thread(opt.depth);
  if (opt.as_json) {
    std::cout << json{{"command", "thread-gen"}, {"depth", t.depth()}, {"rows", t.rows()}}.dump()
              << '\n';
  } else {
    chroma::io::write_thread(std::cout, t);
  }
  return 0;
}

struct ThreadCheckOptions {
  std::string file;
  bool as_json = false;
};

int run_thread_check(const ThreadCheckOptions& opt) {
  const auto rows = load_thread_rows(opt.file);
  const chroma::ThreadReport report = chroma::validate_thread(rows);
  if (opt.as_json) {
    std::cout << json{{"command", "thread-check"},
                      {"rows", rows.size()},
                      {"structural_errors", report.structural_errors},
                      {"undominated", report.undominated},
                      {"valid", report.structurally_valid()}}
                     .dump()
              << '\n';
  } else {
    std::cout << "rows " << rows.size() << '\n';
    std::cout << "structural-errors " << report.structural_errors.size() << '\n';
    for (const auto& error : report.structural_errors) std::cout << "error " << error << '\n';
    std::cout << "undominated " << report.undominated.size() << '\n';
    for (const auto& s : report.undominated) std::cout << "u " << s << '\n';
  }
  return report.structurally_valid() ? 0 : 1;
}

struct LevelOptions {
  int k = 1;
  std::string thread_file;
  bool as_json = false;
};

int run_g0_level(const LevelOptions& opt) {
  const chroma::DenseThread t = opt.thread_file.empty()
                                    ? chroma::canonical_thread(opt.k + 1)
                                    : chroma::DenseThread(load_thread_rows(opt.thread_file));
  const chroma::LevelGraph level = chroma::level_graph(t, opt.k);
  if (opt.as_json) {
    std::vector<std::string> labels;
    labels.reserve(level.graph.vertex_count());
    for (int v = 0; v < level.graph.vertex_count(); ++v) labels.push_back(level.label(v));
    std::cout << json{{"command", "g0-level"},
                      {"k", level.k},
                      {"vertices", level.graph.vertex_count()},
                      {"edges", level.graph.edges()},
                      {"labels", labels}}
                     .dump()
              << '\n';
  } else {
    chroma::io::write_level_graph(std::cout, level);
  }
  return 0;
}

struct ChromOptions {
  std::string file;
  bool oracle = false;
  bool as_json = false;
};

int run_chrom(const ChromOptions& opt) {
  const chroma::FiniteGraph g = load_graph(opt.file);
  const chroma::ChiResult result = chroma::chromatic_number(g);
  bool agree = true;
  int oracle_chi = -1;
  if (opt.oracle) {
    oracle_chi = chroma::brute_force_chromatic(g);  // rejects more than 8 vertices
    agree = oracle_chi == result.chi;
  }
  if (opt.as_json) {
    json payload{{"command", "chrom"},
                 {"vertices", g.vertex_count()},
                 {"edges", g.edge_count()},
                 {"chi", result.chi},
                 {"coloring", result.witness.colours}};
    payload["clique"] = result.clique ? json(*result.clique) : json(nullptr);
    payload["oracle"] = opt.oracle ? json{{"chi", oracle_chi}, {"agree", agree}} : json(nullptr);
    std::cout << payload.dump() << '\n';
  } else {
    std::cout << "c chi " << result.chi << '\n';
    if (result.clique && !result.clique->empty()) {
      std::cout << "c clique";
      for (int v : *result.clique) std::cout << ' ' << v + 1;
      std::cout << '\n';
    }
    if (opt.oracle) {
      std::cout << "c oracle " << oracle_chi << (agree ? " agree" : " disagree") << '\n';
    }
    chroma::io::write_coloring(std::cout, result.witness);
  }
  return agree ? 0 : 1;
}

struct VerifyOptions {
  std::string graph_file;
  std::string coloring_file;
  bool as_json = false;
};

int run_verify(const VerifyOptions& opt) {
  const chroma::FiniteGraph g = load_graph(opt.graph_file);
  const chroma::Coloring c = load_coloring(opt.coloring_file, g.vertex_count());
  const bool proper = chroma::is_proper(g, c);
  std::pair<int, int> violation{-1, -1};
  if (!proper) {
    for (auto [u, v] : g.edges()) {
      if (c[u] == c[v]) {
        violation = {u, v};
        break;
      }
    }
  }
  if (opt.as_json) {
    json payload{{"command", "verify"}, {"proper", proper}, {"colors", c.distinct()}};
    payload["violation"] = proper ? json(nullptr) : json{violation.first, violation.second};
    std::cout << payload.dump() << '\n';
  } else if (proper) {
    std::cout << "proper\ncolors " << c.distinct() << '\n';
  } else {
    std::cout << "improper\nedge " << violation.first + 1 << ' ' << violation.second + 1
              << " color " << c[violation.first] << '\n';
  }
  return proper ? 0 : 1;
}

struct Shift3Options {
  std::string lasso_text;
  bool as_json = false;
};

int run_shift3(const Shift3Options& opt) {
  const chroma::Lasso x = chroma::io::parse_lasso(opt.lasso_text);
  const int colour = chroma::shift3_color(x);
  if (opt.as_json) {
    std::cout << json{{"command", "shift3"},
                      {"lasso", chroma::io::format_lasso(x)},
                      {"color", colour}}
                     .dump()
              << '\n';
  } else {
    std::cout << "lasso " << chroma::io::format_lasso(x) << '\n';
    std::cout << "color " << colour << '\n';
  }
  return 0;
}

struct SweepOptions {
  int alphabet = 2;
  int max_prefix = 3;
  int max_cycle = 3;
  bool as_json = false;
};

int run_shift3_sweep(const SweepOptions& opt) {
  const chroma::SweepResult result =
      chroma::shift3_sweep(opt.alphabet, opt.max_prefix, opt.max_cycle);
  if (opt.as_json) {
    json payload{{"command", "shift3-sweep"}, {"alphabet", opt.alphabet},
                 {"max_prefix", opt.max_prefix}, {"max_cycle", opt.max_cycle},
                 {"lassos", result.lassos},     {"pairs", result.pairs},
                 {"violations", result.violations}};
    if (result.first_violation) {
      payload["first_violation"] = {chroma::io::format_lasso(result.first_violation->first),
                                    chroma::io::format_lasso(result.first_violation->second)};
    } else {
      payload["first_violation"] = nullptr;
    }
    std::cout << payload.dump() << '\n';
  } else {
    std::cout << "alphabet " << opt.alphabet << '\n';
    std::cout << "lassos " << result.lassos << '\n';
    std::cout << "pairs " << result.pairs << '\n';
    std::cout << "violations " << result.violations << '\n';
    if (result.first_violation) {
      std::cout << "x " << chroma::io::format_lasso(result.first_violation->first) << '\n';
      std::cout << "y " << chroma::io::format_lasso(result.first_violation->second) << '\n';
    }
    std::cout << "verdict " << (result.violations == 0 ? "proper" : "improper") << '\n';
  }
  return result.violations == 0 ? 0 : 1;
}

struct FamilyFileOptions {
  std::string functions_file;
  bool as_json = false;
};

int run_gen_graph(const FamilyFileOptions& opt) {
  const chroma::FiniteGraph g = chroma::generate_graph(load_family(opt.functions_file));
  if (opt.as_json) {
    std::cout << json{{"command", "gen-graph"},
                      {"vertices", g.vertex_count()},
                      {"edges", g.edges()}}
                     .dump()
              << '\n';
  } else {
    chroma::io::write_graph(std::cout, g);
  }
  return 0;
}

int run_uniformize(const FamilyFileOptions& opt) {
  const auto pairs = chroma::uniformize(load_family(opt.functions_file));
  if (opt.as_json) {
    std::cout << json{{"command", "uniformize"}, {"pairs", pairs}}.dump() << '\n';
  } else {
    std::cout << "c pairs " << pairs.size() << '\n';
    for (auto [x, y] : pairs) std::cout << x + 1 << ' ' << y + 1 << '\n';
  }
  return 0;
}

struct CoverOptions {
  std::string graph_file;
  bool as_json = false;
};

int run_cover(const CoverOptions& opt) {
  const chroma::FiniteGraph g = load_graph(opt.graph_file);
  const chroma::FunctionFamily family = chroma::covering_family(g);
  if (opt.as_json) {
    std::cout << json{{"command", "cover"},
                      {"functions", family.functions},
                      {"count", family.function_count()}}
                     .dump()
              << '\n';
  } else {
    std::cout << "c functions " << family.function_count() << '\n';
    chroma::io::write_family(std::cout, family);
  }
  return 0;
}

int emit_coloring_report(const std::string& algorithm, const chroma::FiniteGraph& g,
                         const chroma::Coloring& c, bool as_json) {
  const bool proper = g.vertex_count() == 0 || chroma::is_proper(g, c);
  if (as_json) {
    std::cout << json{{"command", "color-" + algorithm},
                      {"colors", c.distinct()},
                      {"proper", proper},
                      {"coloring", c.colours}}
                     .dump()
              << '\n';
  } else {
    std::cout << "c algorithm " << algorithm << '\n';
    std::cout << "c colors " << c.distinct() << '\n';
    std::cout << "c proper " << (proper ? 1 : 0) << '\n';
    chroma::io::write_coloring(std::cout, c);
  }
  return proper ? 0 : 1;
}

struct ColorGraphOptions {
  std::string graph_file;
  std::string transversal;
  bool as_json = false;
};

int run_color_mis(const ColorGraphOptions& opt) {
  const chroma::FiniteGraph g = load_graph(opt.graph_file);
  return emit_coloring_report("mis", g, chroma::mis_peel_color(g), opt.as_json);
}

int run_color_acyclic(const ColorGraphOptions& opt) {
  const chroma::FiniteGraph g = load_graph(opt.graph_file);
  const std::vector<int> transversal = parse_vertex_list(opt.transversal);
  return emit_coloring_report("acyclic", g, chroma::two_color_acyclic(g, transversal),
                              opt.as_json);
}

int run_color_palette(const ColorGraphOptions& opt) {
  const chroma::FiniteGraph g = load_graph(opt.graph_file);
  return emit_coloring_report("palette", g,
                              chroma::palette_color(g, chroma::component_order(g)), opt.as_json);
}

int run_color_transfer(const FamilyFileOptions& opt) {
  const chroma::FunctionFamily family = load_family(opt.functions_file);
  const chroma::FiniteGraph g = chroma::generate_graph(family);
  return emit_coloring_report("transfer", g, chroma::transfer3_color(family), opt.as_json);
}

struct ObstructOptions {
  std::string family;
  int depth = 0;
  std::string thread_file;
  bool as_json = false;
};

int run_obstruct(const ObstructOptions& opt) {
  if (opt.family == "g0") {
    const chroma::DenseThread t = opt.thread_file.empty()
                                      ? chroma::canonical_thread(opt.depth + 2)
                                      : chroma::DenseThread(load_thread_rows(opt.thread_file));
    const chroma::LevelObstruction witness = chroma::g0_obstruction(t, opt.depth);
    const chroma::LevelGraph level = chroma::level_graph(t, witness.level);
    const bool adjacent = level.graph.adjacent(witness.vertex_a, witness.vertex_b);
    if (opt.as_json) {
      std::cout << json{{"command", "obstruct"},
                        {"family", "g0"},
                        {"depth", witness.depth},
                        {"level", witness.level},
                        {"a", {{"vertex", witness.vertex_a}, {"bits", witness.bits_a}}},
                        {"b", {{"vertex", witness.vertex_b}, {"bits", witness.bits_b}}},
                        {"shared_prefix", witness.shared_prefix},
                        {"adjacent", adjacent}}
                       .dump()
                << '\n';
    } else {
      std::cout << "family g0\n";
      std::cout << "depth " << witness.depth << '\n';
      std::cout << "level " << witness.level << '\n';
      std::cout << "a " << witness.vertex_a + 1 << ' ' << witness.bits_a << '\n';
      std::cout << "b " << witness.vertex_b + 1 << ' ' << witness.bits_b << '\n';
      std::cout << "shared " << witness.shared_prefix << '\n';
      std::cout << "adjacent " << (adjacent ? 1 : 0) << '\n';
    }
    return adjacent ? 0 : 1;
  }

  const chroma::TailObstruction witness = chroma::g1_obstruction(opt.depth);
  const bool adjacent = chroma::g1_adjacent(witness.x, witness.y);
  const std::string shared(opt.depth, '0');
  if (opt.as_json) {
    std::cout << json{{"command", "obstruct"},
                      {"family", "g1"},
                      {"depth", witness.depth},
                      {"x", chroma::io::format_lasso(witness.x)},
                      {"y", chroma::io::format_lasso(witness.y)},
                      {"shared_prefix", shared},
                      {"adjacent", adjacent}}
                     .dump()
              << '\n';
  } else {
    std::cout << "family g1\n";
    std::cout << "depth " << witness.depth << '\n';
    std::cout << "x " << chroma::io::format_lasso(witness.x) << '\n';
    std::cout << "y " << chroma::io::format_lasso(witness.y) << '\n';
    std::cout << "shared " << shared << '\n';
    std::cout << "adjacent " << (adjacent ? 1 : 0) << '\n';
  }
  return adjacent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for shift graphs, dense-thread level graphs and exact colourings"};
  app.require_subcommand(1);
  int rc = 0;

  // thread gen / thread check
  auto* thread_cmd = app.add_subcommand("thread", "dense-thread utilities");
  thread_cmd->require_subcommand(1);
  ThreadGenOptions thread_gen_opt;
  auto* thread_gen = thread_cmd->add_subcommand("gen", "emit the canonical thread");
  thread_gen->add_option("--depth", thread_gen_opt.depth, "number of rows")
      ->required()
      ->check(CLI::Range(1, 1 << 20));
  thread_gen->add_flag("--json", thread_gen_opt.as_json, "machine-readable output");
  thread_gen->callback([&] { rc = run_thread_gen(thread_gen_opt); });

  ThreadCheckOptions thread_check_opt;
  auto* thread_check = thread_cmd->add_subcommand("check", "validate a thread file");
  thread_check->add_option("file", thread_check_opt.file, "thread file")->required();
  thread_check->add_flag("--json", thread_check_opt.as_json, "machine-readable output");
  thread_check->callback([&] { rc = run_thread_check(thread_check_opt); });

  // g0 level
  auto* g0_cmd = app.add_subcommand("g0", "dense-thread level graphs");
  g0_cmd->require_subcommand(1);
  LevelOptions level_opt;
  auto* g0_level = g0_cmd->add_subcommand("level", "emit one level graph");
  g0_level->add_option("--k", level_opt.k, "level index")
      ->required()
      ->check(CLI::Range(0, 22));
  g0_level->add_option("--thread", level_opt.thread_file,
                       "thread file (canonical thread when absent)");
  g0_level->add_flag("--json", level_opt.as_json, "machine-readable output");
  g0_level->callback([&] { rc = run_g0_level(level_opt); });

  // chrom
  ChromOptions chrom_opt;
  auto* chrom = app.add_subcommand("chrom", "exact chromatic number of a graph file");
  chrom->add_option("file", chrom_opt.file, "graph file")->required();
  chrom->add_flag("--oracle", chrom_opt.oracle,
                  "cross-check with exhaustive enumeration (at most 8 vertices)");
  chrom->add_flag("--json", chrom_opt.as_json, "machine-readable output");
  chrom->callback([&] { rc = run_chrom(chrom_opt); });

  // verify
  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "check a colouring file against a graph file");
  verify->add_option("file", verify_opt.graph_file, "graph file")->required();
  verify->add_option("--coloring", verify_opt.coloring_file, "colouring file")->required();
  verify->add_flag("--json", verify_opt.as_json, "machine-readable output");
  verify->callback([&] { rc = run_verify(verify_opt); });

  // shift3 [--lasso] / shift3 sweep
  Shift3Options shift3_opt;
  auto* shift3 = app.add_subcommand("shift3", "shift-adjacency 3-colouring of lassos");
  auto* lasso_option = shift3->add_option("--lasso", shift3_opt.lasso_text,
                                          "lasso as <alphabet>:<prefix>;<cycle>");
  shift3->add_flag("--json", shift3_opt.as_json, "machine-readable output");

  SweepOptions sweep_opt;
  auto* sweep = shift3->add_subcommand("sweep", "exhaustive properness check");
  sweep->add_option("--alphabet", sweep_opt.alphabet, "alphabet size")
      ->required()
      ->check(CLI::Range(2, 16));
  sweep->add_option("--max-prefix", sweep_opt.max_prefix, "largest prefix length")
      ->required()
      ->check(CLI::Range(0, 30));
  sweep->add_option("--max-cycle", sweep_opt.max_cycle, "largest cycle length")
      ->required()
      ->check(CLI::Range(1, 30));
  sweep->add_flag("--json", sweep_opt.as_json, "machine-readable output");
  sweep->callback([&] { rc = run_shift3_sweep(sweep_opt); });
  shift3->callback([&] {
    if (sweep->parsed()) return;
    if (lasso_option->count() == 0) {
      throw CLI::RequiredError("--lasso (or the sweep subcommand)");
    }
    rc = run_shift3(shift3_opt);
  });

  // gen-graph / uniformize / cover
  FamilyFileOptions gen_graph_opt;
  auto* gen_graph = app.add_subcommand("gen-graph", "graph generated by a function family");
  gen_graph->add_option("--functions", gen_graph_opt.functions_file, "family file")->required();
  gen_graph->add_flag("--json", gen_graph_opt.as_json, "machine-readable output");
  gen_graph->callback([&] { rc = run_gen_graph(gen_graph_opt); });

  FamilyFileOptions uniformize_opt;
  auto* uniformize_cmd =
      app.add_subcommand("uniformize", "least-index selection pairs of a family");
  uniformize_cmd->add_option("--functions", uniformize_opt.functions_file, "family file")
      ->required();
  uniformize_cmd->add_flag("--json", uniformize_opt.as_json, "machine-readable output");
  uniformize_cmd->callback([&] { rc = run_uniformize(uniformize_opt); });

  CoverOptions cover_opt;
  auto* cover = app.add_subcommand("cover", "edge-covering involution family of a graph");
  cover->add_option("file", cover_opt.graph_file, "graph file")->required();
  cover->add_flag("--json", cover_opt.as_json, "machine-readable output");
  cover->callback([&] { rc = run_cover(cover_opt); });

  // color mis / acyclic / palette / transfer
  auto* color = app.add_subcommand("color", "constructive colouring procedures");
  color->require_subcommand(1);

  ColorGraphOptions mis_opt;
  auto* color_mis = color->add_subcommand("mis", "maximal-independent-set peeling");
  color_mis->add_option("file", mis_opt.graph_file, "graph file")->required();
  color_mis->add_flag("--json", mis_opt.as_json, "machine-readable output");
  color_mis->callback([&] { rc = run_color_mis(mis_opt); });

  ColorGraphOptions acyclic_opt;
  auto* color_acyclic = color->add_subcommand("acyclic", "distance parity on acyclic graphs");
  color_acyclic->add_option("file", acyclic_opt.graph_file, "graph file")->required();
  color_acyclic
      ->add_option("--transversal", acyclic_opt.transversal,
                   "comma-separated 1-based vertices, one per component")
      ->required();
  color_acyclic->add_flag("--json", acyclic_opt.as_json, "machine-readable output");
  color_acyclic->callback([&] { rc = run_color_acyclic(acyclic_opt); });

  ColorGraphOptions palette_opt;
  auto* color_palette = color->add_subcommand("palette", "least-extendable-colour optimum");
  color_palette->add_option("file", palette_opt.graph_file, "graph file")->required();
  color_palette->add_flag("--json", palette_opt.as_json, "machine-readable output");
  color_palette->callback([&] { rc = run_color_palette(palette_opt); });

  FamilyFileOptions transfer_opt;
  auto* color_transfer =
      color->add_subcommand("transfer", "3-colouring of a single-function graph");
  color_transfer->add_option("--functions", transfer_opt.functions_file, "family file")
      ->required();
  color_transfer->add_flag("--json", transfer_opt.as_json, "machine-readable output");
  color_transfer->callback([&] { rc = run_color_transfer(transfer_opt); });

  // obstruct
  ObstructOptions obstruct_opt;
  auto* obstruct = app.add_subcommand("obstruct", "prefix-determined colouring obstruction");
  obstruct->add_option("--family", obstruct_opt.family, "adjacency family")
      ->required()
      ->check(CLI::IsMember({"g0", "g1"}));
  obstruct->add_option("--depth", obstruct_opt.depth, "shared prefix depth")
      ->required()
      ->check(CLI::Range(0, 1 << 20));
  obstruct->add_option("--thread", obstruct_opt.thread_file,
                       "thread file for g0 (canonical thread when absent)");
  obstruct->add_flag("--json", obstruct_opt.as_json, "machine-readable output");
  obstruct->callback([&] { rc = run_obstruct(obstruct_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
