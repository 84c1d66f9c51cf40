#pragma once

#include <map>
#include <vector>

#include "liebra/trees.hpp"

namespace liebra {

// Per-vertex incoming-edge record over the sorted vertex list: +1 red head,
// -1 blue head, 0 at the root.
std::vector<int> index_vector(const ColoredGraph& g);

// Strict reverse-lexicographic order: rightmost nonzero of a-b is negative.
bool rlex_less(const std::vector<int>& a, const std::vector<int>& b);

enum class Cmp { Less, Equal, Greater, Incomparable };

// The recursive index order: equal-count trees compare by rlex on their
// index vectors; at equal index, fewer root children is smaller; at equal
// child counts, the root subtrees (matched by sorted root label, requiring
// equal vertex sets) must all compare favorably.
bool ind_leq(const ColoredGraph& g, const ColoredGraph& h);
Cmp ind_compare(const ColoredGraph& g, const ColoredGraph& h);

// Re-hangs the subtree at y (a non-root vertex) directly onto the root,
// keeping the detached edge's color. A root child comes back unchanged.
ColoredGraph operated_from(const ColoredGraph& g, int y);

// All single-move successors: re-hangs of deeper vertices, plus moves inside
// a root subtree spliced back at that subtree's (possibly new) root.
std::vector<ColoredGraph> op_moves(const ColoredGraph& g);

struct OpReach {
  std::vector<ColoredGraph> trees;             // enumeration order
  std::vector<std::vector<int>> moves;         // move successors, by index
  std::vector<std::vector<char>> reach;        // reflexive-transitive closure
  std::map<ColoredGraph, int> index;

  int index_of(const ColoredGraph& g) const;
  bool leq(const ColoredGraph& g, const ColoredGraph& h) const;
};

OpReach op_reachability(int n);

// Deterministic topological order of the basis trees compatible with
// ind_compare; ties fall back to the canonical edge-list order.
std::vector<ColoredGraph> linear_extension(int n);

}  // namespace liebra
