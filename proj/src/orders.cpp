#include "liebra/orders.hpp"

#include <algorithm>
#include <set>

#include "liebra/util.hpp"

namespace liebra {

std::vector<int> index_vector(const ColoredGraph& g) {
  RootedView rv = rooted_view(g);
  std::vector<int> out;
  out.reserve(g.vertices.size());
  for (int v : g.vertices) {
    if (v == rv.root) {
      out.push_back(0);
    } else {
      out.push_back(rv.edge_color.at(v) == Color::Red ? 1 : -1);
    }
  }
  return out;
}

bool rlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw DomainError("rlex on unequal lengths");
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

// Cached shape of one tree: index vector, edge-color counts, and the root
// subtrees as recursive profiles.  Subtrees are matched across two trees by
// their vertex sets, not by their roots (the same block may be rooted
// differently in each tree), so they are sorted by smallest vertex: blocks
// partition the non-root vertices, making that order unambiguous.
struct IndProfile {
  int root = 0;
  std::vector<int> vset;
  std::vector<int> iota;
  int reds = 0;
  int blues = 0;
  std::vector<IndProfile> subs;
};

IndProfile build_profile(const ColoredGraph& g) {
  IndProfile p;
  p.vset = g.vertices;
  p.iota = index_vector(g);
  for (const Edge& e : g.edges) {
    (e.c == Color::Red ? p.reds : p.blues)++;
  }
  RootedView rv = rooted_view(g);
  p.root = rv.root;
  for (int x : rv.kids(rv.root)) {
    p.subs.push_back(build_profile(induced(g, rv.subtree(x))));
  }
  std::sort(p.subs.begin(), p.subs.end(),
            [](const IndProfile& a, const IndProfile& b) { return a.vset < b.vset; });
  return p;
}

bool profile_leq(const IndProfile& a, const IndProfile& b) {
  if (a.vset != b.vset) return false;
  if (a.vset.size() == 1) return true;
  if (a.iota == b.iota) {
    if (a.subs.size() != b.subs.size()) return a.subs.size() < b.subs.size();
    for (std::size_t j = 0; j < a.subs.size(); ++j) {
      if (a.subs[j].vset != b.subs[j].vset) return false;
    }
    for (std::size_t j = 0; j < a.subs.size(); ++j) {
      if (!profile_leq(a.subs[j], b.subs[j])) return false;
    }
    return true;
  }
  return a.reds == b.reds && a.blues == b.blues && rlex_less(a.iota, b.iota);
}

}  // namespace

bool ind_leq(const ColoredGraph& g, const ColoredGraph& h) {
  if (g.vertices != h.vertices) throw DomainError("index order needs a common vertex set");
  return profile_leq(build_profile(g), build_profile(h));
}

Cmp ind_compare(const ColoredGraph& g, const ColoredGraph& h) {
  const bool fwd = ind_leq(g, h);
  const bool bwd = ind_leq(h, g);
  if (fwd && bwd) {
    if (!(g == h)) throw InternalError("index order lost antisymmetry");
    return Cmp::Equal;
  }
  if (fwd) return Cmp::Less;
  if (bwd) return Cmp::Greater;
  return Cmp::Incomparable;
}

ColoredGraph operated_from(const ColoredGraph& g, int y) {
  RootedView rv = rooted_view(g);
  if (!g.has_vertex(y)) throw DomainError("no such vertex");
  if (y == rv.root) throw DomainError("cannot re-hang the root");
  const int p = rv.parent.at(y);
  const Color c = rv.edge_color.at(y);
  ColoredGraph h = ColoredGraph::on_vertices(g.vertices);
  for (const Edge& e : g.edges) {
    if (e == Edge(p, y, c)) continue;
    h.add_edge(e.u, e.v, e.c);
  }
  h.add_edge(rv.root, y, c);
  h.normalize();
  return h;
}

std::vector<ColoredGraph> op_moves(const ColoredGraph& g) {
  RootedView rv = rooted_view(g);
  std::set<ColoredGraph> out;
  for (int y : g.vertices) {
    if (y == rv.root || rv.parent.at(y) == rv.root) continue;
    out.insert(operated_from(g, y));
  }
  for (int x : rv.kids(rv.root)) {
    const std::vector<int> block = rv.subtree(x);
    const ColoredGraph sub = induced(g, block);
    const Color c = rv.edge_color.at(x);
    for (const ColoredGraph& moved : op_moves(sub)) {
      ColoredGraph h = ColoredGraph::on_vertices(g.vertices);
      for (const Edge& e : g.edges) {
        // Inside edges are replaced by the moved subtree, the attachment edge
        // by the root-to-new-root edge below.
        if (std::binary_search(block.begin(), block.end(), e.u) ||
            std::binary_search(block.begin(), block.end(), e.v))
          continue;
        h.add_edge(e.u, e.v, e.c);
      }
      for (const Edge& e : moved.edges) h.add_edge(e.u, e.v, e.c);
      h.add_edge(rv.root, rooted_view(moved).root, c);
      h.normalize();
      out.insert(h);
    }
  }
  for (const ColoredGraph& h : out) {
    if (h == g || !is_basis_tree(h)) throw InternalError("bad move target");
  }
  return {out.begin(), out.end()};
}

int OpReach::index_of(const ColoredGraph& g) const {
  auto it = index.find(g);
  if (it == index.end()) throw DomainError("tree outside the enumerated family");
  return it->second;
}

bool OpReach::leq(const ColoredGraph& g, const ColoredGraph& h) const {
  return reach[static_cast<std::size_t>(index_of(g))][static_cast<std::size_t>(index_of(h))] != 0;
}

OpReach op_reachability(int n) {
  if (n < 1 || n > 5) throw DomainError("reachability table is desk-scale only");
  OpReach r;
  r.trees = enumerate_basis_trees(n);
  const std::size_t count = r.trees.size();
  for (std::size_t i = 0; i < count; ++i) r.index.emplace(r.trees[i], static_cast<int>(i));
  r.moves.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (const ColoredGraph& h : op_moves(r.trees[i])) {
      r.moves[i].push_back(r.index_of(h));
    }
  }
  r.reach.assign(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<int> stack{static_cast<int>(i)};
    r.reach[i][i] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : r.moves[static_cast<std::size_t>(v)]) {
        if (!r.reach[i][static_cast<std::size_t>(w)]) {
          r.reach[i][static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return r;
}

std::vector<ColoredGraph> linear_extension(int n) {
  const std::vector<ColoredGraph> trees = enumerate_basis_trees(n);
  const std::size_t count = trees.size();
  std::vector<IndProfile> prof;
  prof.reserve(count);
  for (const ColoredGraph& g : trees) prof.push_back(build_profile(g));

  std::vector<std::vector<char>> leq(count, std::vector<char>(count, 0));
  parallel_for(count, [&](std::size_t i) {
    for (std::size_t j = 0; j < count; ++j) {
      leq[i][j] = profile_leq(prof[i], prof[j]) ? 1 : 0;
    }
  });

  std::vector<int> indeg(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j && leq[i][j] && !leq[j][i]) indeg[j]++;
    }
  }

  auto canon_before = [&trees](int a, int b) {
    return trees[static_cast<std::size_t>(a)] < trees[static_cast<std::size_t>(b)];
  };
  std::set<int, decltype(canon_before)> ready(canon_before);
  for (std::size_t j = 0; j < count; ++j) {
    if (indeg[j] == 0) ready.insert(static_cast<int>(j));
  }
  std::vector<ColoredGraph> out;
  out.reserve(count);
  while (!ready.empty()) {
    const int i = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(trees[static_cast<std::size_t>(i)]);
    for (std::size_t j = 0; j < count; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      if (ui != j && leq[ui][j] && !leq[j][ui] && --indeg[j] == 0) {
        ready.insert(static_cast<int>(j));
      }
    }
  }
  if (out.size() != count) throw InternalError("index order produced a cycle");
  return out;
}

}  // namespace liebra
