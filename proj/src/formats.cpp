#include "liebra/formats.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace liebra {

std::string edge_list_text(const ColoredGraph& g) {
  std::string out;
  for (const Edge& e : g.edges) {
    out += color_char(e.c);
    out += ' ' + std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
  }
  return out;
}

std::string edge_list_text(const OrientedGraph& g) {
  std::string out;
  for (const Arc& a : g.edges) {
    out += color_char(a.c);
    out += ' ' + std::to_string(a.src) + '>' + std::to_string(a.dst) + '\n';
  }
  return out;
}

namespace {

struct EdgeLine {
  Color c;
  int a = 0;
  int b = 0;
  bool oriented = false;
};

// Parses `r 1 2`, `r 1>2`, or `r 1 > 2`; returns false on blank/comment lines.
bool parse_edge_line(const std::string& line, int lineno, EdgeLine& out) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  };
  auto fail = [&](const std::string& what) -> void {
    throw DomainError("graph parse error at line " + std::to_string(lineno) + ": " + what);
  };
  skip();
  if (i == line.size() || line[i] == '#') return false;
  if (line[i] != 'r' && line[i] != 'b') fail("expected color 'r' or 'b'");
  out.c = color_from_char(line[i++]);
  auto number = [&]() -> int {
    skip();
    std::size_t start = i;
    long v = 0;
    while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
      v = v * 10 + (line[i] - '0');
      if (v > 64) fail("vertex label out of range 1..64");
      ++i;
    }
    if (i == start) fail("expected a vertex label");
    if (v < 1) fail("vertex label out of range 1..64");
    return static_cast<int>(v);
  };
  out.a = number();
  skip();
  if (i < line.size() && line[i] == '>') {
    ++i;
    out.oriented = true;
  } else {
    out.oriented = false;
  }
  out.b = number();
  skip();
  if (i != line.size()) fail("trailing input");
  return true;
}

std::vector<EdgeLine> parse_edge_lines(const std::string& text) {
  std::vector<EdgeLine> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    EdgeLine e;
    if (parse_edge_line(line, lineno, e)) out.push_back(e);
  }
  return out;
}

std::vector<int> alphabet_for(const std::vector<EdgeLine>& edges, int n) {
  int top = n;
  for (const EdgeLine& e : edges) top = std::max({top, e.a, e.b});
  if (top < 1) throw DomainError("empty graph needs an explicit alphabet size");
  std::vector<int> vs(static_cast<std::size_t>(top));
  std::iota(vs.begin(), vs.end(), 1);
  return vs;
}

}  // namespace

ColoredGraph parse_colored_text(const std::string& text, int n) {
  const std::vector<EdgeLine> edges = parse_edge_lines(text);
  for (const EdgeLine& e : edges) {
    if (e.oriented) throw DomainError("oriented edge in an undirected graph");
  }
  ColoredGraph g = ColoredGraph::on_vertices(alphabet_for(edges, n));
  for (const EdgeLine& e : edges) g.add_edge(e.a, e.b, e.c);
  g.normalize();
  return g;
}

OrientedGraph parse_oriented_text(const std::string& text, int n) {
  const std::vector<EdgeLine> edges = parse_edge_lines(text);
  OrientedGraph g = OrientedGraph::on_vertices(alphabet_for(edges, n));
  for (const EdgeLine& e : edges) {
    if (!e.oriented) throw DomainError("undirected edge in an oriented graph");
    g.add_edge(e.a, e.b, e.c);
  }
  g.normalize();
  return g;
}

namespace {

nlohmann::json edges_json(const std::vector<Edge>& edges) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Edge& e : edges) {
    arr.push_back({{"u", e.u}, {"v", e.v}, {"c", std::string(1, color_char(e.c))}});
  }
  return arr;
}

nlohmann::json arcs_json(const std::vector<Arc>& arcs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Arc& a : arcs) {
    arr.push_back({{"u", a.src}, {"v", a.dst}, {"c", std::string(1, color_char(a.c))}});
  }
  return arr;
}

nlohmann::json parse_graph_json(const std::string& text, bool want_oriented) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("graph JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw DomainError("graph JSON needs \"n\" and \"edges\"");
  }
  if (j.contains("schema") && j["schema"] != 1) throw DomainError("unsupported schema version");
  if (j.value("oriented", false) != want_oriented) {
    throw DomainError(want_oriented ? "expected an oriented graph" : "expected an undirected graph");
  }
  return j;
}

}  // namespace

std::string graph_json(const ColoredGraph& g) {
  nlohmann::json j{{"schema", 1}, {"n", g.n()}, {"edges", edges_json(g.edges)}};
  return j.dump();
}

std::string graph_json(const OrientedGraph& g) {
  nlohmann::json j{{"schema", 1}, {"n", g.n()}, {"oriented", true}, {"edges", arcs_json(g.edges)}};
  return j.dump();
}

ColoredGraph colored_from_json(const std::string& text) {
  const nlohmann::json j = parse_graph_json(text, false);
  ColoredGraph g = ColoredGraph::on_alphabet(j["n"].get<int>());
  for (const auto& e : j["edges"]) {
    g.add_edge(e.at("u").get<int>(), e.at("v").get<int>(),
               color_from_char(e.at("c").get<std::string>().at(0)));
  }
  g.normalize();
  return g;
}

OrientedGraph oriented_from_json(const std::string& text) {
  const nlohmann::json j = parse_graph_json(text, true);
  OrientedGraph g = OrientedGraph::on_alphabet(j["n"].get<int>());
  for (const auto& e : j["edges"]) {
    g.add_edge(e.at("u").get<int>(), e.at("v").get<int>(),
               color_from_char(e.at("c").get<std::string>().at(0)));
  }
  g.normalize();
  return g;
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    return ch == '{';
  }
  return false;
}

}  // namespace

ColoredGraph load_colored_graph(const std::string& path, int n) {
  const std::string text = slurp(path);
  return looks_like_json(text) ? colored_from_json(text) : parse_colored_text(text, n);
}

OrientedGraph load_oriented_graph(const std::string& path, int n) {
  const std::string text = slurp(path);
  return looks_like_json(text) ? oriented_from_json(text) : parse_oriented_text(text, n);
}

namespace {

std::string signed_coeff(long long c) { return (c >= 0 ? "+" : "") + std::to_string(c); }

}  // namespace

std::string combo_text(const MonCombo& c) {
  std::string out;
  for (const auto& [m, coeff] : c) {
    if (!out.empty()) out += ' ';
    out += signed_coeff(coeff) + "*" + m.text();
  }
  return out.empty() ? "0" : out;
}

std::string combo_text(const PoisCombo& c) {
  std::string out;
  for (const auto& [pm, coeff] : c) {
    if (!out.empty()) out += ' ';
    out += signed_coeff(coeff) + "*" + pm.text();
  }
  return out.empty() ? "0" : out;
}

std::string arcs_text(const OrientedGraph& g) {
  if (g.edges.empty()) return "-";
  std::string out;
  for (const Arc& a : g.edges) {
    if (!out.empty()) out += ' ';
    out += color_char(a.c);
    out += std::to_string(a.src) + ">" + std::to_string(a.dst);
  }
  return out;
}

std::string combo_text(const EilCombo& c) {
  std::string out;
  for (const auto& [g, coeff] : c) {
    out += signed_coeff(coeff) + " * " + arcs_text(g) + "\n";
  }
  return out.empty() ? "0\n" : out;
}

std::string index_vector_text(const ColoredGraph& g) {
  std::string out;
  for (int x : index_vector(g)) {
    if (!out.empty()) out += ' ';
    out += x == 0 ? "0" : signed_coeff(x);
  }
  return out;
}

std::string opdag_dot(const OpReach& r) {
  std::string out = "digraph opdag {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < r.trees.size(); ++i) {
    out += "  t" + std::to_string(i) + " [label=\"" + r.trees[i].line() + "\"];\n";
  }
  for (std::size_t i = 0; i < r.moves.size(); ++i) {
    for (int j : r.moves[i]) {
      out += "  t" + std::to_string(i) + " -> t" + std::to_string(j) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace liebra
