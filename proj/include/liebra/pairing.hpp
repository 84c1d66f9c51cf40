#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liebra/rewrite.hpp"

namespace liebra {

using GraphCombo = LinCombo<OrientedGraph>;

// Subtree rooted at the lowest common ancestor of two leaves.
Monomial path_nadir(const Monomial& t, int i, int j);

struct BetaResult {
  std::vector<std::pair<Arc, Monomial>> assignment;  // arc -> nadir subtree
  bool is_bijection = false;
  bool color_preserving = false;
  int ccw_count = 0;  // arcs entering their nadir from the right subtree
};

// Sends each arc to the nadir of its endpoints' leaf path; the pairing reads
// off bijectivity onto the bracket nodes, color agreement, and the sign.
BetaResult beta_map(const OrientedGraph& g, const Monomial& t);

// (-1)^ccw when beta_map is a color-preserving bijection, else 0.
int pair_value(const OrientedGraph& g, const Monomial& t);

long long pair_combo(const GraphCombo& gs, const MonCombo& ts);

struct PairingMatrix {
  std::vector<ColoredGraph> order;  // index set, rows and columns alike
  std::vector<long long> entries;   // dense row-major
  int dim() const { return static_cast<int>(order.size()); }
  long long at(int i, int j) const { return entries[static_cast<std::size_t>(i) * order.size() + j]; }
  bool upper_triangular() const;
  bool diagonal_unimodular() const;
  // First (i,j) with i > j and a nonzero entry, if any.
  std::vector<std::pair<int, int>> lower_violations(std::size_t cap = 8) const;
};

// entry(i,j) = pair_value(oriented order[i], basis monomial of order[j]).
PairingMatrix pairing_matrix(const std::vector<ColoredGraph>& order);

// Same rows, but explicit column monomials (alternative bases).
PairingMatrix pairing_matrix_columns(const std::vector<ColoredGraph>& order,
                                     const std::vector<Monomial>& columns);

// ---- relation elements on the monomial side (tree surgeries) ---------------
// Each element is one defining identity instantiated at a bracket site of an
// ambient monomial: S* swaps the site's children, J* cyclically rotates a
// nested same-color site, MJ emits the six mixed terms of a red-red site.

std::vector<RelationElement> theta_exhaustive(int n, RelKind kind);
RelationElement theta_random(RelKind kind, int n, Rng& rng);

// ---- relation elements on the graph side ------------------------------------

enum class GammaKind { S1, S2, J1, J2, MJ, MultiEdge, Disconnected };
const char* gamma_kind_name(GammaKind k);
inline constexpr GammaKind kAllGammaKinds[] = {
    GammaKind::S1, GammaKind::S2,        GammaKind::J1,          GammaKind::J2,
    GammaKind::MJ, GammaKind::MultiEdge, GammaKind::Disconnected};

struct GammaElement {
  GammaKind kind;
  GraphCombo combo;
  std::string context;
};

// Every two-arc placement on {1,2,3}: arc-flip pairs for S*, the rotation
// triples for J*/MJ, and the one-term multi-edge/disconnected generators.
std::vector<GammaElement> gamma_exhaustive_3(GammaKind kind);
GammaElement gamma_random(GammaKind kind, int n, Rng& rng);

}  // namespace liebra
