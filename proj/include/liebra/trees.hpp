#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "liebra/graph.hpp"

namespace liebra {

// ---- labeled and rooted tree enumeration -----------------------------------

// Visits every labeled tree on {1..n} as an edge list, ordered by the
// lexicographic order of the defining sequences (single tree for n = 1, 2).
void for_each_labeled_tree(int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn);

// Visits every rooted tree on {1..n}: labeled trees in the order above, and
// for each, roots 1..n. Count is n^(n-1).
void for_each_rooted_tree(int n, const std::function<void(const RootedTree&)>& fn);

// Materialized variant; guarded to modest n because the list is n^(n-1) long.
std::vector<RootedTree> enumerate_rooted_trees(int n);

// Uniform random rooted tree on {1..n}.
RootedTree random_rooted_tree(int n, Rng& rng);

// Uniform random pattern-free colored tree on the given sorted letters.
ColoredGraph random_basis_tree(const std::vector<int>& letters, Rng& rng);

// ---- the rooted-tree / colored-tree bijection -------------------------------

// Edge {parent, child} becomes red when parent < child, blue otherwise.
ColoredGraph colored_from_rooted(const RootedTree& t);

// Inverse: requires a pattern-free colored tree; its consistent orientation
// then has a unique source, which is the root.
RootedTree rooted_from_colored(const ColoredGraph& g);

// Orientation rule: a red edge points low-to-high, a blue edge high-to-low.
OrientedGraph consistent_orientation(const ColoredGraph& g);
ColoredGraph underlying_colored(const OrientedGraph& g);
bool is_consistent(const OrientedGraph& g);

// Vertices of indegree zero, sorted.
std::vector<int> sources(const OrientedGraph& g);

// ---- forbidden patterns ------------------------------------------------------

// Each pattern is a pair of edges whose consistent orientations point into a
// common vertex; the kind records the two edge colors.
enum class Pattern { DoubleRed, DoubleBlue, RedBlue };

// Conventional tags: 1r3r2 (two red edges), 2b1b3 (two blue), 1r2b3 (mixed).
const char* pattern_tag(Pattern p);

struct PatternHit {
  Pattern kind;
  int i, j, k;  // the sorted vertex triple carrying the two edges
  std::string describe() const;
  friend auto operator<=>(const PatternHit&, const PatternHit&) = default;
};

std::vector<PatternHit> pattern_violations(const ColoredGraph& g);

// Pattern-free colored trees on {1..n}. Count is n^(n-1).
std::vector<ColoredGraph> enumerate_basis_trees(int n);
bool is_basis_tree(const ColoredGraph& g);

// ---- structure helpers -------------------------------------------------------

bool has_multi_edge(const ColoredGraph& g);
bool has_multi_edge(const OrientedGraph& g);
std::vector<std::vector<int>> components(const ColoredGraph& g);
std::vector<std::vector<int>> components(const OrientedGraph& g);
bool is_tree(const ColoredGraph& g);
bool is_tree(const OrientedGraph& g);

// Rebuild a graph on new labels; `target` must be sorted, unique, and as long
// as the vertex list. The map sends the i-th smallest vertex to target[i].
ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& target);
OrientedGraph relabel(const OrientedGraph& g, const std::vector<int>& target);

// Parent/children picture of a pattern-free colored tree (root = the unique
// source of the consistent orientation). Works on any vertex labels.
struct RootedView {
  int root = 0;
  std::vector<int> vertices;                 // sorted
  std::map<int, int> parent;                 // root absent
  std::map<int, Color> edge_color;           // color of the edge to the parent
  std::map<int, std::vector<int>> children;  // sorted lists; leaves absent

  const std::vector<int>& kids(int v) const;
  std::vector<int> subtree(int v) const;  // sorted vertex set below (and incl.) v
};

RootedView rooted_view(const ColoredGraph& g);

// Induced subgraph on a sorted subset of vertices.
ColoredGraph induced(const ColoredGraph& g, const std::vector<int>& subset);
OrientedGraph induced(const OrientedGraph& g, const std::vector<int>& subset);

}  // namespace liebra
