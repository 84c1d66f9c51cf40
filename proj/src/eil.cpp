#include "liebra/eil.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "liebra/util.hpp"

namespace liebra {

std::vector<OrientedGraph> eil_basis(int n) {
  std::vector<OrientedGraph> out;
  for (const ColoredGraph& g : enumerate_basis_trees(n)) {
    out.push_back(consistent_orientation(g));
  }
  return out;
}

namespace {

constexpr long long kStepBudget = 2'000'000;

thread_local std::map<OrientedGraph, EilCombo> eil_memo;
thread_local long long eil_steps = 0;

bool arc_consistent(const Arc& a) {
  return a.c == Color::Red ? a.src < a.dst : a.src > a.dst;
}

// Flips every inconsistent arc; each flip costs a sign.
std::pair<OrientedGraph, int> make_consistent(const OrientedGraph& g) {
  OrientedGraph h = OrientedGraph::on_vertices(g.vertices);
  int sign = 1;
  for (const Arc& a : g.edges) {
    if (arc_consistent(a)) {
      h.add_edge(a.src, a.dst, a.c);
    } else {
      h.add_edge(a.dst, a.src, a.c);
      sign = -sign;
    }
  }
  h.normalize();
  return {h, sign};
}

OrientedGraph with_arcs(const std::vector<int>& vertices, const std::vector<Arc>& arcs) {
  OrientedGraph g = OrientedGraph::on_vertices(vertices);
  for (const Arc& a : arcs) g.add_edge(a.src, a.dst, a.c);
  g.normalize();
  return g;
}

EilCombo run(const OrientedGraph& g);

// The leaf x carries a single arc w->x; the rest normalizes independently and
// the arc goes back onto every resulting basic graph.
EilCombo peel_leaf(const OrientedGraph& g, int x) {
  Arc in(1, 2, Color::Red);
  std::vector<Arc> rest_arcs;
  for (const Arc& a : g.edges) {
    if (a.dst == x) {
      in = a;
    } else {
      rest_arcs.push_back(a);
    }
  }
  std::vector<int> rest_v;
  for (int v : g.vertices) {
    if (v != x) rest_v.push_back(v);
  }
  EilCombo out;
  for (const auto& [k, c] : run(with_arcs(rest_v, rest_arcs))) {
    std::vector<Arc> arcs = k.edges;
    arcs.push_back(in);
    OrientedGraph h = with_arcs(g.vertices, arcs);
    if (sources(h).size() != 1) throw InternalError("leaf reattachment left extra sources");
    out.add(h, c);
  }
  return out;
}

// One recombined tree from the split step: basic stays, a peelable leaf
// recurses, and the two-directed-paths shape gets the three-letter rewrite at
// the cherry formed by `e` and the second arc into its head.
EilCombo resolve_term(const OrientedGraph& h, const Arc& e) {
  if (sources(h).size() == 1) return {h, 1};

  std::map<int, int> deg, indeg;
  for (const Arc& a : h.edges) {
    deg[a.src]++;
    deg[a.dst]++;
    indeg[a.dst]++;
  }
  for (int v : h.vertices) {
    if (deg[v] == 1 && indeg[v] == 1) return run(h);
  }

  std::vector<Arc> ins;
  for (const Arc& a : h.edges) {
    if (a.dst == e.dst) ins.push_back(a);
  }
  if (ins.size() != 2) throw InternalError("split term is not a two-path tree");
  const Arc other = ins[0] == e ? ins[1] : ins[0];
  std::vector<Arc> rest;
  for (const Arc& a : h.edges) {
    if (!(a == e) && !(a == other)) rest.push_back(a);
  }

  auto with_pair = [&](const Arc& p, const Arc& q) {
    std::vector<Arc> arcs = rest;
    arcs.push_back(p);
    arcs.push_back(q);
    return with_arcs(h.vertices, arcs);
  };

  EilCombo out;
  if (e.c == Color::Red) {
    // cherry {z->x, y->x} both red: reverse e and rotate the red triple
    const int x = e.dst, y = e.src, z = other.src;
    if (other.c != Color::Red) throw InternalError("mixed cherry at the top letter");
    out += run(with_pair(Arc(x, y, Color::Red), Arc(y, z, Color::Red)));
    out += run(with_pair(Arc(z, x, Color::Red), Arc(y, z, Color::Red)));
    return out;
  }
  // blue e = x->y against e' = z->y
  const int x = e.src, y = e.dst, z = other.src;
  if (other.c == Color::Blue) {
    out += run(with_pair(Arc(y, x, Color::Blue), Arc(x, z, Color::Blue)));
    out += run(with_pair(Arc(z, y, Color::Blue), Arc(x, z, Color::Blue)));
    return out;
  }
  // mixed cherry: the six-term combination leaves five partners
  out += run(with_pair(Arc(z, y, Color::Blue), Arc(y, x, Color::Red)));
  out += run(with_pair(Arc(y, x, Color::Blue), Arc(x, z, Color::Red)));
  out += run(with_pair(Arc(x, z, Color::Blue), Arc(z, y, Color::Red)));
  out += run(with_pair(Arc(y, x, Color::Red), Arc(x, z, Color::Blue)));
  out += run(with_pair(Arc(x, z, Color::Red), Arc(z, y, Color::Blue)));
  return out;
}

// Splits at `e`, normalizes both components, and resolves every recombined
// product term.
EilCombo split_at(const OrientedGraph& g, const Arc& e) {
  std::vector<Arc> kept;
  for (const Arc& a : g.edges) {
    if (!(a == e)) kept.push_back(a);
  }
  const OrientedGraph cut = with_arcs(g.vertices, kept);
  const std::vector<std::vector<int>> comps = components(cut);
  if (comps.size() != 2) throw InternalError("edge removal must split a tree in two");

  const EilCombo first = run(induced(cut, comps[0]));
  const EilCombo second = run(induced(cut, comps[1]));
  EilCombo out;
  for (const auto& [k1, c1] : first) {
    for (const auto& [k2, c2] : second) {
      std::vector<Arc> arcs = k1.edges;
      arcs.insert(arcs.end(), k2.edges.begin(), k2.edges.end());
      arcs.push_back(e);
      EilCombo resolved = resolve_term(with_arcs(g.vertices, arcs), e);
      resolved *= c1 * c2;
      out += resolved;
    }
  }
  return out;
}

// `g` is a consistent tree with at least two sources.
EilCombo reduce(const OrientedGraph& g) {
  std::map<int, int> deg, indeg;
  for (const Arc& a : g.edges) {
    deg[a.src]++;
    deg[a.dst]++;
    indeg[a.dst]++;
  }
  for (int v : g.vertices) {
    if (deg[v] == 1 && indeg[v] == 1) return peel_leaf(g, v);
  }

  // No peelable leaf: split at the largest letter, preferring a red arc
  // (which must point into it); otherwise all its arcs are blue and outgoing.
  const int top = g.vertices.back();
  const Arc* pick = nullptr;
  for (const Arc& a : g.edges) {
    if (a.dst == top && a.c == Color::Red && (pick == nullptr || a.src < pick->src)) pick = &a;
  }
  if (pick == nullptr) {
    for (const Arc& a : g.edges) {
      if (a.src == top && a.c == Color::Blue && (pick == nullptr || a.dst < pick->dst)) pick = &a;
    }
  }
  if (pick == nullptr) throw InternalError("top letter has no usable arc");
  return split_at(g, *pick);
}

EilCombo run(const OrientedGraph& g0) {
  if (!is_tree(g0)) return {};
  auto [g, sign] = make_consistent(g0);
  auto it = eil_memo.find(g);
  if (it == eil_memo.end()) {
    if (++eil_steps > kStepBudget) throw InternalError("graph normalization budget exceeded");
    EilCombo res = sources(g).size() == 1 ? EilCombo(g, 1) : reduce(g);
    it = eil_memo.emplace(std::move(g), std::move(res)).first;
  }
  EilCombo out = it->second;
  out *= sign;
  return out;
}

}  // namespace

EilCombo eil_normalize(const OrientedGraph& g) {
  eil_steps = 0;
  OrientedGraph in = g;
  in.normalize();
  return run(in);
}

EilCombo eil_normalize_combo(const EilCombo& c) {
  EilCombo out;
  for (const auto& [g, coeff] : c) {
    EilCombo part = eil_normalize(g);
    part *= coeff;
    out += part;
  }
  return out;
}

}  // namespace liebra
