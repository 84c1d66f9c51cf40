#include "liebra/trees.hpp"

#include <algorithm>
#include <set>

namespace liebra {

// Decodes a length n-2 sequence over {1..n} into the unique labeled tree
// whose leaf-stripping record it is.
static std::vector<std::pair<int, int>> decode_sequence(int n, const std::vector<int>& seq) {
  std::vector<int> deg(n + 1, 1);
  for (int s : seq) ++deg[s];
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, s);
    if (--deg[s] == 1) leaves.insert(s);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return edges;
}

void for_each_labeled_tree(int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (n < 1) throw DomainError("alphabet size must be positive");
  if (n == 1) {
    fn({});
    return;
  }
  std::vector<int> seq(n - 2, 1);
  for (;;) {
    fn(decode_sequence(n, seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n) seq[i--] = 1;
    if (i < 0) break;
    ++seq[i];
  }
}

void for_each_rooted_tree(int n, const std::function<void(const RootedTree&)>& fn) {
  for_each_labeled_tree(n, [&](const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    RootedTree t;
    t.n = n;
    std::vector<int> stack;
    std::vector<char> seen(n + 1);
    for (int root = 1; root <= n; ++root) {
      t.root = root;
      t.parent.assign(n + 1, 0);
      std::fill(seen.begin(), seen.end(), 0);
      stack.assign(1, root);
      seen[root] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
          if (!seen[w]) {
            seen[w] = 1;
            t.parent[w] = v;
            stack.push_back(w);
          }
      }
      fn(t);
    }
  });
}

std::vector<RootedTree> enumerate_rooted_trees(int n) {
  if (n > 8) throw DomainError("rooted-tree list too large to materialize (n > 8)");
  std::vector<RootedTree> out;
  out.reserve(static_cast<std::size_t>(ipow(n, n - 1)));
  for_each_rooted_tree(n, [&](const RootedTree& t) { out.push_back(t); });
  return out;
}

RootedTree random_rooted_tree(int n, Rng& rng) {
  if (n < 1) throw DomainError("alphabet size must be positive");
  RootedTree t;
  t.n = n;
  t.root = rand_int(1, n, rng);
  t.parent.assign(n + 1, 0);
  if (n == 1) return t;
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = rand_int(1, n, rng);
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [a, b] : decode_sequence(n, seq)) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> stack{t.root};
  std::vector<char> seen(n + 1);
  seen[t.root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        t.parent[w] = v;
        stack.push_back(w);
      }
  }
  return t;
}

ColoredGraph random_basis_tree(const std::vector<int>& letters, Rng& rng) {
  ColoredGraph g = colored_from_rooted(random_rooted_tree(static_cast<int>(letters.size()), rng));
  return relabel(g, letters);
}

ColoredGraph colored_from_rooted(const RootedTree& t) {
  ColoredGraph g = ColoredGraph::on_alphabet(t.n);
  for (int v = 1; v <= t.n; ++v) {
    if (v == t.root) continue;
    int p = t.parent[v];
    g.add_edge(p, v, p < v ? Color::Red : Color::Blue);
  }
  g.normalize();
  return g;
}

OrientedGraph consistent_orientation(const ColoredGraph& g) {
  OrientedGraph o = OrientedGraph::on_vertices(g.vertices);
  for (const Edge& e : g.edges) {
    if (e.c == Color::Red)
      o.add_edge(e.u, e.v, e.c);
    else
      o.add_edge(e.v, e.u, e.c);
  }
  o.normalize();
  return o;
}

ColoredGraph underlying_colored(const OrientedGraph& g) {
  ColoredGraph c = ColoredGraph::on_vertices(g.vertices);
  for (const Arc& a : g.edges) c.add_edge(a.src, a.dst, a.c);
  c.normalize();
  return c;
}

bool is_consistent(const OrientedGraph& g) {
  for (const Arc& a : g.edges) {
    bool ok = a.c == Color::Red ? a.src < a.dst : a.src > a.dst;
    if (!ok) return false;
  }
  return true;
}

std::vector<int> sources(const OrientedGraph& g) {
  std::set<int> heads;
  for (const Arc& a : g.edges) heads.insert(a.dst);
  std::vector<int> out;
  for (int v : g.vertices)
    if (!heads.count(v)) out.push_back(v);
  return out;
}

RootedTree rooted_from_colored(const ColoredGraph& g) {
  int n = g.n();
  for (int i = 0; i < n; ++i)
    if (g.vertices[i] != i + 1) throw DomainError("rooted form requires alphabet 1..n");
  if (!is_tree(g)) throw DomainError("rooted form requires a tree");
  std::vector<PatternHit> hits = pattern_violations(g);
  if (!hits.empty()) throw DomainError(hits.front().describe());
  OrientedGraph o = consistent_orientation(g);
  std::vector<int> src = sources(o);
  if (src.size() != 1) throw InternalError("pattern-free tree lacks a unique source");
  RootedTree t;
  t.n = n;
  t.root = src[0];
  t.parent.assign(n + 1, 0);
  for (const Arc& a : o.edges) t.parent[a.dst] = a.src;
  return t;
}

const char* pattern_tag(Pattern p) {
  switch (p) {
    case Pattern::DoubleRed: return "1r3r2";
    case Pattern::DoubleBlue: return "2b1b3";
    case Pattern::RedBlue: return "1r2b3";
  }
  return "?";
}

std::string PatternHit::describe() const {
  return std::string("pattern ") + pattern_tag(kind) + " with (i,j,k)=(" + std::to_string(i) +
         "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

std::vector<PatternHit> pattern_violations(const ColoredGraph& g) {
  OrientedGraph o = consistent_orientation(g);
  std::map<int, std::vector<Arc>> in;
  for (const Arc& a : o.edges) in[a.dst].push_back(a);
  std::vector<PatternHit> hits;
  for (const auto& [w, arcs] : in) {
    for (std::size_t x = 0; x < arcs.size(); ++x) {
      for (std::size_t y = x + 1; y < arcs.size(); ++y) {
        int s1 = arcs[x].src, s2 = arcs[y].src;
        Color c1 = arcs[x].c, c2 = arcs[y].c;
        if (c1 == Color::Red && c2 == Color::Red) {
          if (s1 != s2) hits.push_back({Pattern::DoubleRed, std::min(s1, s2), std::max(s1, s2), w});
        } else if (c1 == Color::Blue && c2 == Color::Blue) {
          if (s1 != s2) hits.push_back({Pattern::DoubleBlue, w, std::min(s1, s2), std::max(s1, s2)});
        } else {
          int red_src = c1 == Color::Red ? s1 : s2;
          int blue_src = c1 == Color::Red ? s2 : s1;
          hits.push_back({Pattern::RedBlue, red_src, w, blue_src});
        }
      }
    }
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

std::vector<ColoredGraph> enumerate_basis_trees(int n) {
  if (n > 8) throw DomainError("basis-tree list too large to materialize (n > 8)");
  std::vector<ColoredGraph> out;
  out.reserve(static_cast<std::size_t>(ipow(n, n - 1)));
  for_each_rooted_tree(n, [&](const RootedTree& t) { out.push_back(colored_from_rooted(t)); });
  return out;
}

bool is_basis_tree(const ColoredGraph& g) { return is_tree(g) && pattern_violations(g).empty(); }

bool has_multi_edge(const ColoredGraph& g) {
  for (std::size_t i = 0; i + 1 < g.edges.size(); ++i)
    if (g.edges[i].u == g.edges[i + 1].u && g.edges[i].v == g.edges[i + 1].v) return true;
  return false;
}

bool has_multi_edge(const OrientedGraph& g) { return has_multi_edge(underlying_colored(g)); }

std::vector<std::vector<int>> components(const ColoredGraph& g) {
  std::map<int, std::vector<int>> adj;
  for (const Edge& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::set<int> seen;
  std::vector<std::vector<int>> comps;
  for (int v : g.vertices) {
    if (seen.count(v)) continue;
    std::vector<int> comp, stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : adj[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<std::vector<int>> components(const OrientedGraph& g) {
  return components(underlying_colored(g));
}

bool is_tree(const ColoredGraph& g) {
  return components(g).size() == 1 && g.edges.size() + 1 == g.vertices.size() && !has_multi_edge(g);
}

bool is_tree(const OrientedGraph& g) { return is_tree(underlying_colored(g)); }

static std::map<int, int> relabel_map(const std::vector<int>& from, const std::vector<int>& to) {
  if (from.size() != to.size()) throw DomainError("relabel target has wrong size");
  for (std::size_t i = 0; i + 1 < to.size(); ++i)
    if (to[i] >= to[i + 1]) throw DomainError("relabel target must be strictly increasing");
  std::map<int, int> m;
  for (std::size_t i = 0; i < from.size(); ++i) m[from[i]] = to[i];
  return m;
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& target) {
  std::map<int, int> m = relabel_map(g.vertices, target);
  ColoredGraph out = ColoredGraph::on_vertices(target);
  for (const Edge& e : g.edges) out.add_edge(m[e.u], m[e.v], e.c);
  out.normalize();
  return out;
}

OrientedGraph relabel(const OrientedGraph& g, const std::vector<int>& target) {
  std::map<int, int> m = relabel_map(g.vertices, target);
  OrientedGraph out = OrientedGraph::on_vertices(target);
  for (const Arc& a : g.edges) out.add_edge(m[a.src], m[a.dst], a.c);
  out.normalize();
  return out;
}

const std::vector<int>& RootedView::kids(int v) const {
  static const std::vector<int> none;
  auto it = children.find(v);
  return it == children.end() ? none : it->second;
}

std::vector<int> RootedView::subtree(int v) const {
  std::vector<int> out, stack{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int c : kids(x)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootedView rooted_view(const ColoredGraph& g) {
  if (!is_tree(g)) throw DomainError("rooted view requires a tree");
  std::vector<PatternHit> hits = pattern_violations(g);
  if (!hits.empty()) throw DomainError(hits.front().describe());
  OrientedGraph o = consistent_orientation(g);
  std::vector<int> src = sources(o);
  if (src.size() != 1) throw InternalError("pattern-free tree lacks a unique source");
  RootedView rv;
  rv.root = src[0];
  rv.vertices = g.vertices;
  for (const Arc& a : o.edges) {
    rv.parent[a.dst] = a.src;
    rv.edge_color[a.dst] = a.c;
    rv.children[a.src].push_back(a.dst);
  }
  for (auto& [v, ch] : rv.children) std::sort(ch.begin(), ch.end());
  return rv;
}

ColoredGraph induced(const ColoredGraph& g, const std::vector<int>& subset) {
  ColoredGraph out = ColoredGraph::on_vertices(subset);
  for (const Edge& e : g.edges)
    if (out.has_vertex(e.u) && out.has_vertex(e.v)) out.add_edge(e.u, e.v, e.c);
  out.normalize();
  return out;
}

OrientedGraph induced(const OrientedGraph& g, const std::vector<int>& subset) {
  OrientedGraph out = OrientedGraph::on_vertices(subset);
  for (const Arc& a : g.edges)
    if (out.has_vertex(a.src) && out.has_vertex(a.dst)) out.add_edge(a.src, a.dst, a.c);
  out.normalize();
  return out;
}

}  // namespace liebra
