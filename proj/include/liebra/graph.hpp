#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "liebra/util.hpp"

namespace liebra {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline char color_char(Color c) { return c == Color::Red ? 'r' : 'b'; }
Color color_from_char(char ch);

// Undirected colored edge; endpoints normalized to u < v.
struct Edge {
  int u;
  int v;
  Color c;
  Edge(int a, int b, Color col);
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Oriented colored edge.
struct Arc {
  int src;
  int dst;
  Color c;
  Arc(int s, int d, Color col);
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Two-colored undirected graph on an explicit vertex set. Edges form a
// multiset; parallel edges are legal (they matter as relation elements).
struct ColoredGraph {
  std::vector<int> vertices;  // sorted, unique
  std::vector<Edge> edges;    // sorted

  static ColoredGraph on_alphabet(int n);
  static ColoredGraph on_vertices(std::vector<int> vs);

  void add_edge(int u, int v, Color c);
  void normalize();
  int n() const { return static_cast<int>(vertices.size()); }
  bool has_vertex(int v) const;

  // Compact one-line form, e.g. "[1,2,3] r1-2 b1-3".
  std::string line() const;

  friend auto operator<=>(const ColoredGraph&, const ColoredGraph&) = default;
};

struct OrientedGraph {
  std::vector<int> vertices;  // sorted, unique
  std::vector<Arc> edges;     // sorted multiset

  static OrientedGraph on_alphabet(int n);
  static OrientedGraph on_vertices(std::vector<int> vs);

  void add_edge(int src, int dst, Color c);
  void normalize();
  int n() const { return static_cast<int>(vertices.size()); }
  bool has_vertex(int v) const;

  // Compact one-line form, e.g. "[1,2,3] r1>2 b3>1".
  std::string line() const;

  friend auto operator<=>(const OrientedGraph&, const OrientedGraph&) = default;
};

// Rooted tree on the alphabet {1..n}; parent[root] == 0, parent[0] unused.
struct RootedTree {
  int n = 0;
  int root = 0;
  std::vector<int> parent;

  friend auto operator<=>(const RootedTree&, const RootedTree&) = default;
};

}  // namespace liebra
