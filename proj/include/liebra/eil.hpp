#pragma once

#include <vector>

#include "liebra/lincombo.hpp"
#include "liebra/trees.hpp"

namespace liebra {

// Combination of oriented graphs; after normalization every key is a
// consistent tree with a unique source.
using EilCombo = LinCombo<OrientedGraph>;

// Consistent orientations of the pattern-free trees; n^(n-1) graphs, each
// with a unique source.
std::vector<OrientedGraph> eil_basis(int n);

// Rewrites an arbitrary oriented two-colored graph into the span of the
// basic graphs. Non-trees (disconnected, parallel edges, cycles) vanish.
EilCombo eil_normalize(const OrientedGraph& g);

EilCombo eil_normalize_combo(const EilCombo& c);

}  // namespace liebra
