#include "chroma/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace chroma::io {

namespace {

std::string at_line(int lineno) { return "line " + std::to_string(lineno) + ": "; }

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

void reject_trailing(std::istringstream& ls, int lineno) {
  std::string extra;
  if (ls >> extra) throw ParseError(at_line(lineno) + "unexpected token '" + extra + "'");
}

long long parse_integer(const std::string& token, const std::string& context) {
  std::size_t consumed = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &consumed);
  } catch (const std::exception&) {
    throw ParseError(context + ": expected an integer, got '" + token + "'");
  }
  if (consumed != token.size()) {
    throw ParseError(context + ": expected an integer, got '" + token + "'");
  }
  return value;
}

}  // namespace

FiniteGraph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n != -1) throw ParseError(at_line(lineno) + "duplicate 'p' header");
      std::string kind;
      long long m = 0;
      if (!(ls >> kind) || kind != "edge") {
        throw ParseError(at_line(lineno) + "expected 'p edge', got '" + kind + "'");
      }
      if (!(ls >> n >> m) || n < 0 || m < 0) {
        throw ParseError(at_line(lineno) + "malformed 'p edge' header");
      }
      reject_trailing(ls, lineno);
      continue;
    }
    if (tag == "e") {
      if (n == -1) throw ParseError(at_line(lineno) + "'e' record before the 'p edge' header");
      long long u = 0;
      long long v = 0;
      if (!(ls >> u >> v)) throw ParseError(at_line(lineno) + "malformed edge record");
      reject_trailing(ls, lineno);
      if (u < 1 || u > n) {
        throw ParseError(at_line(lineno) + "vertex " + std::to_string(u) + " out of range");
      }
      if (v < 1 || v > n) {
        throw ParseError(at_line(lineno) + "vertex " + std::to_string(v) + " out of range");
      }
      if (u == v) throw ParseError(at_line(lineno) + "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
      continue;
    }
    throw ParseError(at_line(lineno) + "unknown record '" + tag + "'");
  }
  if (n == -1) throw ParseError("missing 'p edge' header");
  return FiniteGraph(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const FiniteGraph& g,
                 const std::vector<std::string>& comments) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& comment : comments) out << "c " << comment << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

FunctionFamily read_family(std::istream& in) {
  std::string line;
  int lineno = 0;
  struct Entry {
    int function, source, image, lineno;
  };
  std::vector<Entry> entries;
  long long max_function = 0;
  long long max_vertex = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag != "f") throw ParseError(at_line(lineno) + "unknown record '" + tag + "'");
    long long i = 0;
    long long u = 0;
    long long v = 0;
    if (!(ls >> i >> u >> v)) throw ParseError(at_line(lineno) + "malformed 'f' record");
    reject_trailing(ls, lineno);
    if (i < 1) throw ParseError(at_line(lineno) + "function index " + std::to_string(i) +
                                " must be positive");
    if (u < 1 || v < 1) throw ParseError(at_line(lineno) + "vertex labels must be positive");
    max_function = std::max(max_function, i);
    max_vertex = std::max({max_vertex, u, v});
    entries.push_back({static_cast<int>(i) - 1, static_cast<int>(u) - 1,
                       static_cast<int>(v) - 1, lineno});
  }
  const int k = static_cast<int>(max_function);
  const int n = static_cast<int>(max_vertex);
  std::vector<std::vector<int>> functions(k, std::vector<int>(n, -1));
  for (const auto& e : entries) {
    if (functions[e.function][e.source] != -1) {
      throw ParseError(at_line(e.lineno) + "duplicate mapping for function " +
                       std::to_string(e.function + 1) + " at vertex " +
                       std::to_string(e.source + 1));
    }
    functions[e.function][e.source] = e.image;
  }
  for (int i = 0; i < k; ++i) {
    for (int u = 0; u < n; ++u) {
      if (functions[i][u] == -1) {
        throw ParseError("function " + std::to_string(i + 1) + " is partial: vertex " +
                         std::to_string(u + 1) + " is unmapped");
      }
    }
  }
  return FunctionFamily(n, std::move(functions));
}

void write_family(std::ostream& out, const FunctionFamily& family) {
  for (int i = 0; i < family.function_count(); ++i) {
    for (int u = 0; u < family.vertex_count; ++u) {
      out << "f " << i + 1 << ' ' << u + 1 << ' ' << family.functions[i][u] + 1 << '\n';
    }
  }
}

Coloring read_coloring(std::istream& in, int vertex_count) {
  std::string line;
  int lineno = 0;
  std::vector<int> colours(vertex_count, -1);
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    const long long v = parse_integer(first, at_line(lineno));
    std::string second;
    if (!(ls >> second)) throw ParseError(at_line(lineno) + "missing colour");
    const long long colour = parse_integer(second, at_line(lineno));
    reject_trailing(ls, lineno);
    if (v < 1 || v > vertex_count) {
      throw ParseError(at_line(lineno) + "vertex " + std::to_string(v) + " out of range");
    }
    if (colour < 0) {
      throw ParseError(at_line(lineno) + "colour " + std::to_string(colour) +
                       " must be nonnegative");
    }
    if (colours[v - 1] != -1) {
      throw ParseError(at_line(lineno) + "vertex " + std::to_string(v) + " coloured twice");
    }
    colours[v - 1] = static_cast<int>(colour);
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (colours[v] == -1) {
      throw ParseError("partial colouring: vertex " + std::to_string(v + 1) + " is uncoloured");
    }
  }
  return Coloring{std::move(colours)};
}

void write_coloring(std::ostream& out, const Coloring& c) {
  for (int v = 0; v < c.size(); ++v) out << v + 1 << ' ' << c[v] << '\n';
}

std::vector<std::string> read_thread_rows(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    for (char ch : line) {
      if (ch != '0' && ch != '1') {
        throw ParseError(at_line(lineno) + "invalid character '" + std::string(1, ch) +
                         "' in a binary row");
      }
    }
    rows.push_back(line);
  }
  return rows;
}

void write_thread(std::ostream& out, const DenseThread& t) {
  for (int k = 0; k < t.depth(); ++k) out << t.row(k) << '\n';
}

namespace {

std::vector<int> parse_symbol_list(const std::string& text, const char* what) {
  std::vector<int> symbols;
  if (text.empty()) return symbols;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                            : comma - start);
    if (token.empty()) throw ParseError(std::string(what) + ": empty symbol token");
    symbols.push_back(static_cast<int>(parse_integer(token, std::string(what) + " symbol")));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return symbols;
}

}  // namespace

Lasso parse_lasso(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("lasso text must look like '<alphabet>:<prefix>;<cycle>', got '" + text + "'");
  }
  const int alphabet =
      static_cast<int>(parse_integer(text.substr(0, colon), "lasso alphabet"));
  const std::string rest = text.substr(colon + 1);
  const std::size_t semi = rest.find(';');
  if (semi == std::string::npos) {
    throw ParseError("lasso text needs ';' between prefix and cycle, got '" + text + "'");
  }
  std::vector<int> prefix = parse_symbol_list(rest.substr(0, semi), "lasso prefix");
  std::vector<int> cycle = parse_symbol_list(rest.substr(semi + 1), "lasso cycle");
  if (cycle.empty()) throw ParseError("lasso cycle must be nonempty");
  return Lasso(alphabet, std::move(prefix), std::move(cycle));
}

std::string format_lasso(const Lasso& x) {
  std::string out = std::to_string(x.alphabet()) + ":";
  for (std::size_t i = 0; i < x.prefix().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(x.prefix()[i]);
  }
  out += ';';
  for (std::size_t i = 0; i < x.cycle().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(x.cycle()[i]);
  }
  return out;
}

void write_level_graph(std::ostream& out, const LevelGraph& lg) {
  std::vector<std::string> comments;
  comments.reserve(lg.graph.vertex_count());
  for (int v = 0; v < lg.graph.vertex_count(); ++v) {
    comments.push_back("vertex " + std::to_string(v + 1) + " = " + lg.label(v));
  }
  write_graph(out, lg.graph, comments);
}

}  // namespace chroma::io
