#include "liebra/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace liebra {

Color color_from_char(char ch) {
  if (ch == 'r' || ch == 'R') return Color::Red;
  if (ch == 'b' || ch == 'B') return Color::Blue;
  throw DomainError(std::string("unknown edge color '") + ch + "'");
}

Edge::Edge(int a, int b, Color col) : u(std::min(a, b)), v(std::max(a, b)), c(col) {
  if (a == b) throw DomainError("loop edge");
}

Arc::Arc(int s, int d, Color col) : src(s), dst(d), c(col) {
  if (s == d) throw DomainError("loop edge");
}

ColoredGraph ColoredGraph::on_alphabet(int n) {
  if (n < 1) throw DomainError("alphabet size must be positive");
  ColoredGraph g;
  g.vertices.resize(n);
  std::iota(g.vertices.begin(), g.vertices.end(), 1);
  return g;
}

ColoredGraph ColoredGraph::on_vertices(std::vector<int> vs) {
  ColoredGraph g;
  g.vertices = std::move(vs);
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  if (g.vertices.empty()) throw DomainError("empty vertex set");
  return g;
}

bool ColoredGraph::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

void ColoredGraph::add_edge(int u, int v, Color c) {
  if (!has_vertex(u) || !has_vertex(v)) throw DomainError("edge endpoint outside vertex set");
  edges.emplace_back(u, v, c);
}

void ColoredGraph::normalize() { std::sort(edges.begin(), edges.end()); }

std::string ColoredGraph::line() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) os << ',';
    os << vertices[i];
  }
  os << ']';
  for (const Edge& e : edges) os << ' ' << color_char(e.c) << e.u << '-' << e.v;
  return os.str();
}

OrientedGraph OrientedGraph::on_alphabet(int n) {
  if (n < 1) throw DomainError("alphabet size must be positive");
  OrientedGraph g;
  g.vertices.resize(n);
  std::iota(g.vertices.begin(), g.vertices.end(), 1);
  return g;
}

OrientedGraph OrientedGraph::on_vertices(std::vector<int> vs) {
  OrientedGraph g;
  g.vertices = std::move(vs);
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  if (g.vertices.empty()) throw DomainError("empty vertex set");
  return g;
}

bool OrientedGraph::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

void OrientedGraph::add_edge(int src, int dst, Color c) {
  if (!has_vertex(src) || !has_vertex(dst)) throw DomainError("edge endpoint outside vertex set");
  edges.emplace_back(src, dst, c);
}

void OrientedGraph::normalize() { std::sort(edges.begin(), edges.end()); }

std::string OrientedGraph::line() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) os << ',';
    os << vertices[i];
  }
  os << ']';
  for (const Arc& a : edges) os << ' ' << color_char(a.c) << a.src << '>' << a.dst;
  return os.str();
}

}  // namespace liebra
