#include "liebra/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "liebra/counting.hpp"
#include "liebra/eil.hpp"
#include "liebra/formats.hpp"
#include "liebra/orders.hpp"
#include "liebra/pairing.hpp"
#include "liebra/poisson.hpp"

namespace liebra {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Aggregates pass/fail tallies; the single synchronization point for the
// parallel check loops.
class Checker {
 public:
  Checker(std::string name, int max_n) {
    rep_.name = std::move(name);
    rep_.max_n = max_n;
  }
  void check(bool ok, const char* what, const std::string& repro = {}) {
    std::lock_guard<std::mutex> lock(mu_);
    ++rep_.checks;
    if (!ok) {
      ++bad_;
      if (rep_.failures.size() < 8) rep_.failures.push_back({what, repro});
    }
  }
  long long bad() {
    std::lock_guard<std::mutex> lock(mu_);
    return bad_;
  }
  SuiteReport take(double secs) {
    std::lock_guard<std::mutex> lock(mu_);
    rep_.seconds = secs;
    return rep_;
  }

 private:
  SuiteReport rep_;
  long long bad_ = 0;
  std::mutex mu_;
};

Rng seeded(std::uint64_t seed, std::uint64_t lane) {
  return Rng(seed ^ (0x9e3779b97f4a7c15ULL * (lane + 1)));
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Color random_color(Rng& rng) { return rand_int(0, 1, rng) ? Color::Blue : Color::Red; }

// Uniform arc multiset on {1..n}; duplicates and antiparallel pairs allowed.
OrientedGraph random_arc_graph(int n, int arcs, Rng& rng) {
  OrientedGraph g = OrientedGraph::on_alphabet(n);
  for (int i = 0; i < arcs; ++i) {
    const int s = rand_int(1, n, rng);
    int d = rand_int(1, n - 1, rng);
    if (d >= s) ++d;
    g.add_edge(s, d, random_color(rng));
  }
  g.normalize();
  return g;
}

// Random labeled tree with every arc's direction and color randomized.
OrientedGraph randomized_tree(int n, Rng& rng) {
  const RootedTree t = random_rooted_tree(n, rng);
  OrientedGraph g = OrientedGraph::on_alphabet(n);
  for (int v = 1; v <= n; ++v) {
    if (v == t.root) continue;
    const int p = t.parent[static_cast<std::size_t>(v)];
    if (rand_int(0, 1, rng)) {
      g.add_edge(v, p, random_color(rng));
    } else {
      g.add_edge(p, v, random_color(rng));
    }
  }
  g.normalize();
  return g;
}

// Random labeled tree with random edge colors (patterns allowed).
ColoredGraph random_colored_tree(int n, Rng& rng) {
  const RootedTree t = random_rooted_tree(n, rng);
  ColoredGraph g = ColoredGraph::on_alphabet(n);
  for (int v = 1; v <= n; ++v) {
    if (v == t.root) continue;
    g.add_edge(t.parent[static_cast<std::size_t>(v)], v, random_color(rng));
  }
  g.normalize();
  return g;
}

bool oracle_holds(const OrientedGraph& g, const MonCombo& image, const Monomial& t) {
  long long rhs = 0;
  for (const auto& [key, coeff] : image) rhs += coeff * pair_value(g, key);
  return pair_value(g, t) == rhs;
}

// ---- module suites ------------------------------------------------------------

void suite_trees(Checker& c, const VerifyOptions& opt) {
  const int top = std::min(opt.max_n, 6);
  for (int n = 1; n <= top; ++n) {
    const std::vector<ColoredGraph> trees = enumerate_basis_trees(n);
    c.check(static_cast<long long>(trees.size()) == ipow(n, n - 1), "basis tree count",
            "n=" + std::to_string(n));
    const std::set<ColoredGraph> uniq(trees.begin(), trees.end());
    c.check(uniq.size() == trees.size(), "basis trees distinct", "n=" + std::to_string(n));
    if (n > 4) continue;
    for (const ColoredGraph& g : trees) {
      bool ok = is_basis_tree(g) && pattern_violations(g).empty() && is_tree(g);
      const OrientedGraph o = consistent_orientation(g);
      ok = ok && is_consistent(o) && sources(o).size() == 1 && underlying_colored(o) == g;
      const RootedTree rt = rooted_from_colored(g);
      ok = ok && colored_from_rooted(rt) == g && sources(o)[0] == rt.root;
      c.check(ok, "basis tree structure", g.line());
    }
  }
  for (int n = 1; n <= std::min(opt.max_n, 4); ++n) {
    const std::vector<ColoredGraph> trees = enumerate_basis_trees(n);
    const std::set<ColoredGraph> basis(trees.begin(), trees.end());
    std::vector<RootedTree> rooted = enumerate_rooted_trees(n);
    c.check(rooted.size() == trees.size(), "rooted tree count", "n=" + std::to_string(n));
    for (const RootedTree& t : rooted) {
      const ColoredGraph g = colored_from_rooted(t);
      c.check(basis.count(g) == 1 && rooted_from_colored(g) == t, "rooted round trip", g.line());
    }
  }
  parallel_for(static_cast<std::size_t>(opt.samples), [&](std::size_t i) {
    Rng rng = seeded(opt.seed, i);
    const ColoredGraph g = random_colored_tree(std::max(2, opt.max_n), rng);
    c.check(is_basis_tree(g) == pattern_violations(g).empty(), "pattern detector agreement",
            g.line());
    const ColoredGraph b = random_basis_tree(g.vertices, rng);
    c.check(is_basis_tree(b), "random basis tree is basis", b.line());
  });
}

void suite_counting(Checker& c, const VerifyOptions& opt) {
  const int top = std::min(opt.max_n + 3, 8);
  for (int n = 1; n <= top; ++n) {
    const std::vector<long long> counted = count_by_increasing_edges(n);
    const std::vector<long long> poly = increasing_edge_polynomial(n);
    c.check(counted == poly, "count equals polynomial", "n=" + std::to_string(n));
    std::vector<long long> rev(poly.rbegin(), poly.rend());
    c.check(rev == poly, "coefficients symmetric", "n=" + std::to_string(n));
    c.check(std::accumulate(poly.begin(), poly.end(), 0LL) == ipow(n, n - 1), "coefficient sum",
            "n=" + std::to_string(n));
    c.check(poly.back() == factorial(n - 1), "top coefficient", "n=" + std::to_string(n));
  }
}

void suite_monomials(Checker& c, const VerifyOptions& opt) {
  const long long catalan[] = {1, 1, 2, 5, 14};
  for (int m = 1; m <= std::min(opt.max_n, 5); ++m) {
    const std::vector<Monomial> all = enumerate_monomials(m);
    const long long want = catalan[m - 1] * factorial(m) * ipow(2, m - 1);
    c.check(static_cast<long long>(all.size()) == want, "monomial family size",
            "m=" + std::to_string(m));
  }
  for (const Monomial& m : enumerate_monomials(3)) {
    c.check(parse_monomial(m.text()) == m, "parse round trip", m.text());
    c.check(m.support() == std::vector<int>({1, 2, 3}), "support", m.text());
  }
  for (int n = 2; n <= std::min(opt.max_n, 4); ++n) {
    const std::vector<ColoredGraph> trees = enumerate_basis_trees(n);
    std::set<Monomial> basis;
    for (const ColoredGraph& g : trees) {
      const Monomial b = basis_monomial(g);
      basis.insert(b);
      std::string why;
      bool ok = is_basis_monomial(b, &why) && bracket_graph(b) == g;
      ok = ok && b.graphical_root() == rooted_from_colored(g).root;
      c.check(ok, "distinguished monomial", g.line() + " -> " + b.text() + " " + why);
    }
    c.check(basis.size() == trees.size(), "distinguished monomials distinct",
            "n=" + std::to_string(n));
    if (n == 3) {
      long long members = 0;
      for (const Monomial& m : enumerate_monomials(3)) {
        if (is_basis_monomial(m)) {
          ++members;
          c.check(basis.count(m) == 1, "membership matches image", m.text());
        }
      }
      c.check(members == 9, "membership count", "n=3");
    }
  }
  parallel_for(static_cast<std::size_t>(opt.samples), [&](std::size_t i) {
    Rng rng = seeded(opt.seed + 1, i);
    std::vector<int> letters(static_cast<std::size_t>(std::max(2, opt.max_n)));
    std::iota(letters.begin(), letters.end(), 1);
    const Monomial m = random_monomial_on(letters, rng);
    c.check(parse_monomial(m.text()) == m, "parse round trip", m.text());
    c.check(is_tree(bracket_graph(m)), "bracket graph is a tree", m.text());
  });
  const char* bad[] = {"", "x0", "x65", "[x1,x1]", "[x1,x2", "x1 x2", "<x1,[x2,x3]", "[x1 x2]"};
  for (const char* s : bad) {
    bool threw = false;
    try {
      parse_monomial(s);
    } catch (const DomainError&) {
      threw = true;
    }
    c.check(threw, "bad input rejected", s);
  }
}

void suite_rewrite(Checker& c, const VerifyOptions& opt) {
  {
    MonCombo want;
    want.add(parse_monomial("[[x1,x3],x2]"), 1);
    want.add(parse_monomial("[x1,[x2,x3]]"), 1);
    c.check(lc_normalize(parse_monomial("[[x1,x2],x3]")) == want, "pinned rewrite", "[[x1,x2],x3]");
  }
  for (int n = 1; n <= std::min(opt.max_n, 4); ++n) {
    for (const ColoredGraph& g : enumerate_basis_trees(n)) {
      const Monomial b = basis_monomial(g);
      c.check(lc_normalize(b) == MonCombo(b, 1), "basis fixed point", b.text());
    }
  }
  parallel_for(static_cast<std::size_t>(opt.samples), [&](std::size_t i) {
    Rng rng = seeded(opt.seed + 2, i);
    std::vector<int> letters(static_cast<std::size_t>(std::max(2, std::min(opt.max_n, 5))));
    std::iota(letters.begin(), letters.end(), 1);
    const Monomial m = random_monomial_on(letters, rng);
    const MonCombo lc = lc_normalize(m);
    bool keys_ok = true;
    for (const auto& [key, coeff] : lc) {
      (void)coeff;
      if (!is_basis_monomial(key) || key.mask() != m.mask()) keys_ok = false;
    }
    c.check(keys_ok, "normalized keys", m.text());
    c.check(lc_normalize_combo(lc) == lc, "idempotent", m.text());
  });
  // class preservation against the pairing, small alphabet exhaustively
  const std::vector<ColoredGraph> trees3 = enumerate_basis_trees(3);
  for (const Monomial& m : enumerate_monomials(3)) {
    const MonCombo lc = lc_normalize(m);
    for (const ColoredGraph& g : trees3) {
      c.check(oracle_holds(consistent_orientation(g), lc, m), "pairing oracle",
              m.text() + " vs " + g.line());
    }
  }
}

void suite_relations(Checker& c, const VerifyOptions& opt) {
  for (RelKind kind : kAllRelKinds) {
    for (const RelationElement& r : exhaustive_relations_3(kind)) {
      c.check(relation_audit(r), "exhaustive relation audit",
              std::string(rel_kind_name(kind)) + " " + r.context);
    }
  }
  for (int n = 3; n <= std::min(opt.max_n, 5); ++n) {
    for (RelKind kind : kAllRelKinds) {
      parallel_for(static_cast<std::size_t>(opt.samples), [&](std::size_t i) {
        Rng rng = seeded(opt.seed + 3 + static_cast<std::uint64_t>(n), i * 8 + static_cast<std::size_t>(kind));
        const RelationElement r = random_relation(kind, n, rng);
        c.check(relation_audit(r), "random relation audit",
                std::string(rel_kind_name(kind)) + " n=" + std::to_string(n) + " " + r.context);
      });
    }
  }
}

void suite_pairing(Checker& c, const VerifyOptions& opt) {
  for (int n = 2; n <= std::min(opt.max_n, 4); ++n) {
    const PairingMatrix m = pairing_matrix(linear_extension(n));
    c.check(m.upper_triangular(), "matrix upper triangular", "n=" + std::to_string(n));
    c.check(m.diagonal_unimodular(), "matrix diagonal unimodular", "n=" + std::to_string(n));
  }
  for (int n = 2; n <= std::min(opt.max_n, 4); ++n) {
    for (const ColoredGraph& g : enumerate_basis_trees(n)) {
      const int d = pair_value(consistent_orientation(g), basis_monomial(g));
      c.check(d == 1 || d == -1, "diagonal pairing", g.line());
    }
  }
  const std::vector<ColoredGraph> trees3 = enumerate_basis_trees(3);
  for (RelKind kind : kAllRelKinds) {
    for (const RelationElement& r : theta_exhaustive(3, kind)) {
      for (const ColoredGraph& g : trees3) {
        c.check(pair_combo(GraphCombo(consistent_orientation(g), 1), r.combo) == 0,
                "monomial relation killed", r.context + " vs " + g.line());
      }
    }
  }
  const std::vector<Monomial> mons3 = enumerate_monomials(3);
  for (GammaKind kind : kAllGammaKinds) {
    for (const GammaElement& e : gamma_exhaustive_3(kind)) {
      for (const Monomial& m : mons3) {
        c.check(pair_combo(e.combo, MonCombo(m, 1)) == 0, "graph relation killed",
                e.context + " vs " + m.text());
      }
    }
  }
}

void suite_orders(Checker& c, const VerifyOptions& opt) {
  for (int n = 2; n <= std::min(opt.max_n, 4); ++n) {
    const std::vector<ColoredGraph> trees = enumerate_basis_trees(n);
    const std::size_t count = trees.size();
    std::vector<std::vector<char>> leq(count, std::vector<char>(count));
    parallel_for(count, [&](std::size_t i) {
      for (std::size_t j = 0; j < count; ++j) leq[i][j] = ind_leq(trees[i], trees[j]) ? 1 : 0;
    });
    bool reflexive = true, antisym = true, transitive = true;
    for (std::size_t i = 0; i < count; ++i) {
      if (!leq[i][i]) reflexive = false;
      for (std::size_t j = 0; j < count; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) antisym = false;
      }
    }
    for (std::size_t i = 0; i < count && transitive; ++i) {
      for (std::size_t j = 0; j < count && transitive; ++j) {
        if (!leq[i][j]) continue;
        for (std::size_t k = 0; k < count; ++k) {
          if (leq[j][k] && !leq[i][k]) {
            transitive = false;
            break;
          }
        }
      }
    }
    c.check(reflexive, "order reflexive", "n=" + std::to_string(n));
    c.check(antisym, "order antisymmetric", "n=" + std::to_string(n));
    c.check(transitive, "order transitive", "n=" + std::to_string(n));

    const std::vector<ColoredGraph> ext = linear_extension(n);
    c.check(std::set<ColoredGraph>(ext.begin(), ext.end()) ==
                std::set<ColoredGraph>(trees.begin(), trees.end()),
            "extension is a permutation", "n=" + std::to_string(n));
    std::map<ColoredGraph, std::size_t> pos;
    for (std::size_t i = 0; i < ext.size(); ++i) pos.emplace(ext[i], i);
    std::map<ColoredGraph, std::size_t> idx;
    for (std::size_t i = 0; i < count; ++i) idx.emplace(trees[i], i);
    bool respects = true;
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        if (i != j && leq[i][j] && pos.at(trees[i]) > pos.at(trees[j])) respects = false;
      }
    }
    c.check(respects, "extension respects order", "n=" + std::to_string(n));

    const OpReach reach = op_reachability(n);
    bool moves_up = true, refines = true;
    for (std::size_t i = 0; i < count; ++i) {
      for (const ColoredGraph& h : op_moves(reach.trees[i])) {
        if (ind_compare(reach.trees[i], h) != Cmp::Less) moves_up = false;
      }
      for (std::size_t j = 0; j < count; ++j) {
        if (reach.reach[i][j] &&
            !leq[idx.at(reach.trees[i])][idx.at(reach.trees[j])]) {
          refines = false;
        }
      }
    }
    c.check(moves_up, "moves strictly increase", "n=" + std::to_string(n));
    c.check(refines, "index order refines reachability", "n=" + std::to_string(n));
  }
  {
    Rng rng = seeded(opt.seed + 4, 0);
    const ColoredGraph g = random_basis_tree({1, 2, 3, 4}, rng);
    const RootedView rv = rooted_view(g);
    bool threw = false;
    try {
      operated_from(g, rv.root);
    } catch (const DomainError&) {
      threw = true;
    }
    c.check(threw, "root move rejected", g.line());
    for (int y : rv.kids(rv.root)) {
      c.check(operated_from(g, y) == g, "root child move is identity", g.line());
    }
  }
}

void suite_eil(Checker& c, const VerifyOptions& opt) {
  for (int n = 1; n <= std::min(opt.max_n, 5); ++n) {
    const std::vector<OrientedGraph> basis = eil_basis(n);
    c.check(static_cast<long long>(basis.size()) == ipow(n, n - 1), "basis size",
            "n=" + std::to_string(n));
    if (n > 4) continue;
    for (const OrientedGraph& o : basis) {
      c.check(is_consistent(o) && sources(o).size() == 1, "basis graph shape", o.line());
      c.check(eil_normalize(o) == EilCombo(o, 1), "basis fixed point", o.line());
    }
  }
  {
    OrientedGraph g = OrientedGraph::on_alphabet(2);
    g.add_edge(2, 1, Color::Red);
    g.normalize();
    OrientedGraph o = OrientedGraph::on_alphabet(2);
    o.add_edge(1, 2, Color::Red);
    o.normalize();
    c.check(eil_normalize(g) == EilCombo(o, -1), "pinned arc flip", g.line());
  }
  {
    OrientedGraph cyc = OrientedGraph::on_alphabet(3);
    cyc.add_edge(1, 2, Color::Red);
    cyc.add_edge(2, 3, Color::Red);
    cyc.add_edge(3, 1, Color::Blue);
    cyc.normalize();
    c.check(eil_normalize(cyc).empty(), "cycle vanishes", cyc.line());
    OrientedGraph multi = OrientedGraph::on_alphabet(2);
    multi.add_edge(1, 2, Color::Red);
    multi.add_edge(1, 2, Color::Blue);
    multi.normalize();
    c.check(eil_normalize(multi).empty(), "multi-edge vanishes", multi.line());
    OrientedGraph disc = OrientedGraph::on_alphabet(3);
    disc.add_edge(1, 2, Color::Red);
    disc.add_edge(2, 1, Color::Blue);
    disc.normalize();
    c.check(eil_normalize(disc).empty(), "disconnected vanishes", disc.line());
  }
  const int n = std::max(2, std::min(opt.max_n, 5));
  const std::vector<ColoredGraph> trees = enumerate_basis_trees(std::min(n, 4));
  parallel_for(static_cast<std::size_t>(opt.samples), [&](std::size_t i) {
    Rng rng = seeded(opt.seed + 5, i);
    const int m = std::min(n, 4);
    const OrientedGraph g =
        (i % 2 == 0) ? random_arc_graph(m, m - 1, rng) : randomized_tree(m, rng);
    const EilCombo image = eil_normalize(g);
    if (!is_tree(g)) {
      c.check(image.empty(), "non-tree vanishes", g.line());
      return;
    }
    bool keys_ok = true;
    for (const auto& [key, coeff] : image) {
      (void)coeff;
      if (!is_consistent(key) || sources(key).size() != 1 ||
          !is_basis_tree(underlying_colored(key))) {
        keys_ok = false;
      }
    }
    c.check(keys_ok, "image keys basic", g.line());
    bool oracle = true;
    for (const ColoredGraph& t : trees) {
      const Monomial b = basis_monomial(t);
      long long rhs = 0;
      for (const auto& [key, coeff] : image) rhs += coeff * pair_value(key, b);
      if (pair_value(g, b) != rhs) oracle = false;
    }
    c.check(oracle, "pairing oracle", g.line());
  });
}

void suite_poisson(Checker& c, const VerifyOptions& opt) {
  const long long forest_counts[] = {1, 3, 16, 125, 1296};
  for (int n = 1; n <= std::min(opt.max_n, 5); ++n) {
    const std::vector<PoissonMonomial> basis = poisson_basis(n);
    c.check(static_cast<long long>(basis.size()) == forest_counts[n - 1], "basis size",
            "n=" + std::to_string(n));
    std::set<std::string> texts;
    for (const PoissonMonomial& b : basis) texts.insert(b.text());
    c.check(texts.size() == basis.size(), "basis distinct", "n=" + std::to_string(n));
  }
  {
    std::set<std::string> got;
    for (const PoissonMonomial& b : poisson_basis(2)) got.insert(b.text());
    c.check(got == std::set<std::string>({"x1*x2", "[x1,x2]", "<x1,x2>"}), "two-letter basis", "");
  }
  {
    const std::string big = "x1*[x2*x3*x4,<x5,x6*x7>]";
    c.check(parse_poisson(big).text() == big, "parse round trip", big);
    c.check(parse_poisson("(x2)*x1").text() == "x1*x2", "factor sort", "(x2)*x1");
    bool threw = false;
    try {
      parse_poisson("[x1,x2]*[x2,x3]");
    } catch (const DomainError& e) {
      threw = std::string(e.what()).find("multilinearity") != std::string::npos;
    }
    c.check(threw, "repeated letter rejected", "[x1,x2]*[x2,x3]");
  }
  for (const PoissonMonomial& b : poisson_basis(3)) {
    c.check(poisson_normalize(b) == PoisCombo(b, 1), "basis fixed point", b.text());
  }
  {
    PoisCombo want;
    want.add(parse_poisson("[x1,x2]*x3"), 1);
    want.add(parse_poisson("[x1,x3]*x2"), 1);
    c.check(poisson_normalize(parse_poisson("[x1,x2*x3]")) == want, "pinned derivation",
            "[x1,x2*x3]");
    c.check(poisson_normalize(parse_poisson("x2*x1")) == PoisCombo(parse_poisson("x1*x2"), 1),
            "commutative reorder", "x2*x1");
  }
  // class preservation and relation killing against all rows, three letters
  {
    const std::vector<OrientedGraph> rows = com_rows(3);
    for (const PoissonMonomial& pm : enumerate_poisson_monomials(3)) {
      const PoisCombo image = poisson_normalize(pm);
      bool ok = true;
      for (const OrientedGraph& row : rows) {
        if (pair_com(row, pm) != pair_com_combo(row, image)) ok = false;
      }
      c.check(ok, "pairing oracle", pm.text());
    }
    for (QbtRelKind kind : kAllQbtRelKinds) {
      for (const PoisCombo& combo : qbt_relation_generators(3, kind)) {
        bool killed = true;
        for (const OrientedGraph& row : rows) {
          if (pair_com_combo(row, combo) != 0) killed = false;
        }
        c.check(killed, "relation killed", qbt_rel_kind_name(kind));
      }
    }
    for (GammaKind kind : kAllGammaKinds) {
      if (kind == GammaKind::Disconnected) continue;  // disconnected graphs are rows here
      for (const GammaElement& e : gamma_exhaustive_3(kind)) {
        bool killed = true;
        for (const PoissonMonomial& pm : enumerate_poisson_monomials(3)) {
          long long total = 0;
          for (const auto& [g, coeff] : e.combo) total += coeff * pair_com(g, pm);
          if (total != 0) killed = false;
        }
        c.check(killed, "graph relation killed", e.context);
      }
    }
  }
  // the product pairing extends the bracket pairing
  parallel_for(static_cast<std::size_t>(opt.samples), [&](std::size_t i) {
    Rng rng = seeded(opt.seed + 6, i);
    const int n = std::max(2, std::min(opt.max_n, 5));
    std::vector<int> letters(static_cast<std::size_t>(n));
    std::iota(letters.begin(), letters.end(), 1);
    const Monomial m = random_monomial_on(letters, rng);
    const OrientedGraph o = consistent_orientation(random_basis_tree(letters, rng));
    c.check(pair_com(o, PoissonMonomial::from_lie(m)) == pair_value(o, m),
            "extends bracket pairing", o.line() + " vs " + m.text());
  });
  {
    OrientedGraph g = OrientedGraph::on_alphabet(7);
    g.add_edge(3, 6, Color::Red);
    g.add_edge(5, 7, Color::Blue);
    g.normalize();
    c.check(pair_com(g, parse_poisson("x1*[x2*x3*x4,<x5,x6*x7>]")) == 1, "worked seven-letter value",
            g.line());
  }
  // non-forest rows annihilate
  parallel_for(static_cast<std::size_t>(opt.samples), [&](std::size_t i) {
    Rng rng = seeded(opt.seed + 7, i);
    const int n = std::max(3, std::min(opt.max_n, 5));
    std::vector<int> letters(static_cast<std::size_t>(n));
    std::iota(letters.begin(), letters.end(), 1);
    const PoissonMonomial pm = random_poisson_monomial(letters, rng);
    int brackets = 0;
    for (char ch : pm.text()) {
      if (ch == '[' || ch == '<') ++brackets;
    }
    const OrientedGraph g = random_arc_graph(n, brackets, rng);
    const ColoredGraph under = underlying_colored(g);
    // forest iff acyclic: every component spans one more vertex than its edges
    const bool forest = !has_multi_edge(under) &&
                        under.edges.size() + components(under).size() == under.vertices.size();
    if (!forest) {
      c.check(pair_com(g, pm) == 0, "non-forest row annihilates", g.line() + " vs " + pm.text());
    }
  });
  const ExpFormulaReport exp = exp_formula_check(8);
  c.check(exp.ok, "convolution matches closed form", "");
  const ComMatrixReport com = com_matrix(3);
  c.check(com.cross_zero && com.blocks_ok && com.dim == 16, "block certificate", "n=3");
}

using SuiteFn = void (*)(Checker&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"trees", suite_trees},       {"counting", suite_counting},
      {"monomials", suite_monomials}, {"rewrite", suite_rewrite},
      {"relations", suite_relations}, {"pairing", suite_pairing},
      {"orders", suite_orders},     {"eil", suite_eil},
      {"poisson", suite_poisson},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suite_table()) {
    (void)fn;
    out.push_back(name);
  }
  return out;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  for (const auto& [key, fn] : suite_table()) {
    if (key != name) continue;
    Checker c(name, opt.max_n);
    const auto t0 = Clock::now();
    try {
      fn(c, opt);
    } catch (const std::exception& e) {
      c.check(false, "unexpected exception", e.what());
    }
    return c.take(seconds_since(t0));
  }
  throw DomainError("unknown suite: " + name);
}

std::vector<SuiteReport> run_all_suites(const VerifyOptions& opt) {
  std::vector<SuiteReport> out;
  for (const auto& [name, fn] : suite_table()) {
    (void)fn;
    out.push_back(run_suite(name, opt));
  }
  return out;
}

// ---- acceptance gates -----------------------------------------------------------

namespace {

// Tally for one criterion; parallel bodies funnel through expect().
struct Probe {
  std::mutex mu;
  long long checks = 0;
  long long bad = 0;
  std::string first;
  void expect(bool ok, const std::string& repro) {
    std::lock_guard<std::mutex> lock(mu);
    ++checks;
    if (!ok) {
      ++bad;
      if (first.empty()) first = repro;
    }
  }
};

AcceptanceResult run_criterion(int id, const std::string& title, double budget_seconds,
                               const std::function<std::string(Probe&)>& body) {
  AcceptanceResult r;
  r.id = id;
  r.title = title;
  const auto t0 = Clock::now();
  Probe p;
  std::string note;
  try {
    note = body(p);
    r.seconds = seconds_since(t0);
    r.pass = p.bad == 0 && (budget_seconds <= 0 || r.seconds < budget_seconds);
    std::ostringstream d;
    d << note << (note.empty() ? "" : "; ") << p.checks << " checks";
    if (p.bad > 0) d << ", " << p.bad << " failed, first: " << p.first;
    if (budget_seconds > 0 && r.seconds >= budget_seconds) {
      d << ", over budget (" << budget_seconds << "s)";
    }
    r.detail = d.str();
  } catch (const std::exception& e) {
    r.seconds = seconds_since(t0);
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

std::string crit_basis_rank(Probe& p) {
  std::ostringstream note;
  note << "counts";
  for (int n = 1; n <= 6; ++n) {
    const std::vector<ColoredGraph> trees = enumerate_basis_trees(n);
    const std::set<ColoredGraph> uniq(trees.begin(), trees.end());
    p.expect(static_cast<long long>(trees.size()) == ipow(n, n - 1) && uniq.size() == trees.size(),
             "n=" + std::to_string(n) + " count " + std::to_string(trees.size()));
    note << " " << trees.size();
  }
  return note.str();
}

std::string crit_poisson_rank(Probe& p) {
  std::ostringstream note;
  note << "ranks";
  for (int n = 1; n <= 5; ++n) {
    const std::vector<PoissonMonomial> basis = poisson_basis(n);
    std::set<std::string> texts;
    for (const PoissonMonomial& b : basis) texts.insert(b.text());
    p.expect(static_cast<long long>(basis.size()) == ipow(n + 1, n - 1) &&
                 texts.size() == basis.size(),
             "n=" + std::to_string(n) + " count " + std::to_string(basis.size()));
    note << " " << basis.size();
  }
  const ExpFormulaReport exp = exp_formula_check(8);
  p.expect(exp.ok, "convolution mismatch");
  note << "; convolution ok to n=8";
  return note.str();
}

std::string crit_lc(Probe& p) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<OrientedGraph> rows;
    for (const ColoredGraph& g : enumerate_basis_trees(n)) {
      rows.push_back(consistent_orientation(g));
    }
    const std::vector<Monomial> mons = enumerate_monomials(n);
    parallel_for(mons.size(), [&](std::size_t i) {
      const Monomial& m = mons[i];
      const MonCombo lc = lc_normalize(m);
      bool keys_ok = true;
      for (const auto& [key, coeff] : lc) {
        (void)coeff;
        if (!is_basis_monomial(key) || key.mask() != m.mask()) keys_ok = false;
      }
      p.expect(keys_ok, "keys " + m.text());
      for (const OrientedGraph& row : rows) {
        p.expect(oracle_holds(row, lc, m), m.text() + " vs " + row.line());
      }
    });
  }
  const std::vector<OrientedGraph> rows5 = eil_basis(5);
  const int samples = 10000;
  parallel_for(static_cast<std::size_t>(samples), [&](std::size_t i) {
    Rng rng = seeded(20230301, i);
    const Monomial m = random_monomial_on({1, 2, 3, 4, 5}, rng);
    const MonCombo lc = lc_normalize(m);
    bool keys_ok = true;
    for (const auto& [key, coeff] : lc) {
      (void)coeff;
      if (!is_basis_monomial(key) || key.mask() != m.mask()) keys_ok = false;
    }
    p.expect(keys_ok, "keys " + m.text());
    bool oracle = true;
    for (int t = 0; t < 64; ++t) {
      const OrientedGraph& row = rows5[static_cast<std::size_t>(
          rand_int(0, static_cast<int>(rows5.size()) - 1, rng))];
      if (!oracle_holds(row, lc, m)) oracle = false;
    }
    p.expect(oracle, "oracle " + m.text());
  });
  return "exhaustive n<=4, 10000 samples n=5 vs 64 rows each";
}

std::string crit_matrix(Probe& p) {
  std::ostringstream note;
  note << "dims";
  for (int n = 2; n <= 5; ++n) {
    const PairingMatrix m = pairing_matrix(linear_extension(n));
    std::string viol;
    if (!m.upper_triangular()) {
      const auto v = m.lower_violations(1);
      if (!v.empty()) {
        viol = " at (" + std::to_string(v[0].first) + "," + std::to_string(v[0].second) + ")";
      }
    }
    p.expect(m.upper_triangular(), "lower entry n=" + std::to_string(n) + viol);
    p.expect(m.diagonal_unimodular(), "diagonal n=" + std::to_string(n));
    note << " " << m.dim();
  }
  return note.str();
}

std::string crit_relation_pairing(Probe& p) {
  // monomial-side combos against all rows
  const std::vector<ColoredGraph> trees3 = enumerate_basis_trees(3);
  for (RelKind kind : kAllRelKinds) {
    const std::vector<RelationElement> all = theta_exhaustive(3, kind);
    parallel_for(all.size(), [&](std::size_t i) {
      bool killed = true;
      for (const ColoredGraph& g : trees3) {
        if (pair_combo(GraphCombo(consistent_orientation(g), 1), all[i].combo) != 0) killed = false;
      }
      p.expect(killed, std::string(rel_kind_name(kind)) + " " + all[i].context);
    });
  }
  // graph-side combos against all monomials
  const std::vector<Monomial> mons3 = enumerate_monomials(3);
  for (GammaKind kind : kAllGammaKinds) {
    const std::vector<GammaElement> all = gamma_exhaustive_3(kind);
    parallel_for(all.size(), [&](std::size_t i) {
      bool killed = true;
      for (const Monomial& m : mons3) {
        if (pair_combo(all[i].combo, MonCombo(m, 1)) != 0) killed = false;
      }
      p.expect(killed, std::string(gamma_kind_name(kind)) + " " + all[i].context);
    });
  }
  // random placements, four and five letters
  for (int n = 4; n <= 5; ++n) {
    std::vector<OrientedGraph> rows;
    for (const ColoredGraph& g : enumerate_basis_trees(n)) {
      rows.push_back(consistent_orientation(g));
    }
    const std::vector<Monomial> mons = enumerate_monomials(n);
    for (RelKind kind : kAllRelKinds) {
      parallel_for(1000, [&](std::size_t i) {
        Rng rng = seeded(777 + static_cast<std::uint64_t>(n), i * 16 + static_cast<std::size_t>(kind));
        const RelationElement r = theta_random(kind, n, rng);
        bool killed = true;
        for (int t = 0; t < 64; ++t) {
          const OrientedGraph& row =
              rows[static_cast<std::size_t>(rand_int(0, static_cast<int>(rows.size()) - 1, rng))];
          if (pair_combo(GraphCombo(row, 1), r.combo) != 0) killed = false;
        }
        p.expect(killed, std::string(rel_kind_name(kind)) + " n=" + std::to_string(n) + " " + r.context);
      });
    }
    for (GammaKind kind : kAllGammaKinds) {
      parallel_for(1000, [&](std::size_t i) {
        Rng rng = seeded(888 + static_cast<std::uint64_t>(n), i * 16 + static_cast<std::size_t>(kind));
        const GammaElement e = gamma_random(kind, n, rng);
        bool killed = true;
        for (int t = 0; t < 64; ++t) {
          const Monomial& m =
              mons[static_cast<std::size_t>(rand_int(0, static_cast<int>(mons.size()) - 1, rng))];
          if (pair_combo(e.combo, MonCombo(m, 1)) != 0) killed = false;
        }
        p.expect(killed, std::string(gamma_kind_name(kind)) + " n=" + std::to_string(n) + " " + e.context);
      });
    }
  }
  return "exhaustive n=3; 1000 placements per kind per side, n=4,5";
}

std::string crit_relation_audit(Probe& p) {
  for (int n = 3; n <= 5; ++n) {
    for (RelKind kind : kAllRelKinds) {
      parallel_for(1000, [&](std::size_t i) {
        Rng rng = seeded(999 + static_cast<std::uint64_t>(n), i * 16 + static_cast<std::size_t>(kind));
        const RelationElement r = random_relation(kind, n, rng);
        p.expect(relation_audit(r),
                 std::string(rel_kind_name(kind)) + " n=" + std::to_string(n) + " " + r.context);
      });
    }
  }
  return "1000 audits per kind, n=3..5";
}

std::string crit_eil(Probe& p) {
  for (int n = 1; n <= 4; ++n) {
    for (const OrientedGraph& o : eil_basis(n)) {
      p.expect(eil_normalize(o) == EilCombo(o, 1), "fixed point " + o.line());
    }
  }
  std::vector<Monomial> cols;
  for (const ColoredGraph& g : enumerate_basis_trees(4)) cols.push_back(basis_monomial(g));
  const int samples = 10000;
  parallel_for(static_cast<std::size_t>(samples), [&](std::size_t i) {
    Rng rng = seeded(424242, i);
    const OrientedGraph g = (i % 2 == 0) ? random_arc_graph(4, 3, rng) : randomized_tree(4, rng);
    const EilCombo image = eil_normalize(g);
    if (!is_tree(g)) {
      p.expect(image.empty(), "non-tree " + g.line());
      return;
    }
    bool keys_ok = true;
    for (const auto& [key, coeff] : image) {
      (void)coeff;
      if (!is_consistent(key) || sources(key).size() != 1 ||
          !is_basis_tree(underlying_colored(key))) {
        keys_ok = false;
      }
    }
    p.expect(keys_ok, "keys " + g.line());
    bool oracle = true;
    for (const Monomial& b : cols) {
      long long rhs = 0;
      for (const auto& [key, coeff] : image) rhs += coeff * pair_value(key, b);
      if (pair_value(g, b) != rhs) oracle = false;
    }
    p.expect(oracle, "oracle " + g.line());
  });
  // explicit degenerate shapes
  {
    OrientedGraph multi = OrientedGraph::on_alphabet(4);
    multi.add_edge(1, 2, Color::Red);
    multi.add_edge(1, 2, Color::Red);
    multi.add_edge(3, 4, Color::Red);
    multi.normalize();
    p.expect(eil_normalize(multi).empty(), "parallel arcs " + multi.line());
    OrientedGraph cyc = OrientedGraph::on_alphabet(4);
    cyc.add_edge(1, 2, Color::Red);
    cyc.add_edge(2, 3, Color::Red);
    cyc.add_edge(3, 1, Color::Blue);
    cyc.normalize();
    p.expect(eil_normalize(cyc).empty(), "cycle " + cyc.line());
  }
  return "fixed points n<=4; 10000 samples n=4 vs all 64 columns";
}

std::string crit_counting(Probe& p) {
  std::ostringstream note;
  for (int n = 1; n <= 8; ++n) {
    const std::vector<long long> counted = count_by_increasing_edges(n);
    const std::vector<long long> poly = increasing_edge_polynomial(n);
    p.expect(counted == poly, "mismatch n=" + std::to_string(n));
    p.expect(counted.back() == factorial(n - 1), "top coefficient n=" + std::to_string(n));
  }
  note << "counts match polynomial, n=1..8; top coefficient (n-1)!";
  return note.str();
}

std::string crit_com(Probe& p) {
  const ComMatrixReport full = com_matrix(3);
  p.expect(full.cross_zero, "cross-partition entry nonzero at n=3");
  p.expect(full.blocks_ok && full.dim == 16, "block structure n=3");
  // five random partitions of four letters
  const auto partitions = set_partitions({1, 2, 3, 4});
  std::vector<std::size_t> order(partitions.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng = seeded(31337, 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < 5 && i < order.size(); ++i) {
    const ComBlockReport block = com_block(partitions[order[i]]);
    std::string tag;
    for (const auto& blk : block.blocks) tag += "{" + std::to_string(blk.size()) + "}";
    p.expect(block.kronecker_ok, "kronecker " + tag);
    p.expect(block.unimodular_ok, "unimodular " + tag);
  }
  // sampled cross-partition zeros at n=4
  const std::vector<OrientedGraph> rows = com_rows(4);
  const std::vector<PoissonMonomial> cols = poisson_basis(4);
  auto canon = [](std::vector<std::vector<int>> blocks) {
    for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
  };
  std::vector<std::vector<std::vector<int>>> row_part, col_part;
  for (const OrientedGraph& r : rows) row_part.push_back(canon(components(r)));
  for (const PoissonMonomial& pm : cols) {
    std::vector<std::vector<int>> blocks;
    for (const PoissonFactor& f : pm.factors()) {
      blocks.push_back(PoissonMonomial::factor(f).support());
    }
    col_part.push_back(canon(std::move(blocks)));
  }
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = static_cast<std::size_t>(rand_int(0, static_cast<int>(rows.size()) - 1, rng));
    const std::size_t s = static_cast<std::size_t>(rand_int(0, static_cast<int>(cols.size()) - 1, rng));
    if (row_part[r] == col_part[s]) continue;
    p.expect(pair_com(rows[r], cols[s]) == 0, rows[r].line() + " vs " + cols[s].text());
  }
  return "full n=3; 5 random partitions + 200 cross pairs n=4";
}

std::string crit_sections(Probe& p) {
  for (int n = 3; n <= 4; ++n) {
    std::map<ColoredGraph, std::vector<Monomial>> fiber;
    for (const Monomial& m : enumerate_monomials(n)) {
      fiber[bracket_graph(m)].push_back(m);
    }
    const std::vector<ColoredGraph> order = linear_extension(n);
    bool covered = true;
    for (const ColoredGraph& g : order) {
      p.expect(!fiber[g].empty(), "empty fiber " + g.line());
      if (fiber[g].empty()) covered = false;
    }
    if (!covered) continue;
    for (int s = 0; s < 20; ++s) {
      Rng rng = seeded(515151 + static_cast<std::uint64_t>(n), static_cast<std::size_t>(s));
      std::vector<Monomial> cols;
      cols.reserve(order.size());
      for (const ColoredGraph& g : order) cols.push_back(pick(fiber[g], rng));
      const PairingMatrix m = pairing_matrix_columns(order, cols);
      p.expect(m.upper_triangular() && m.diagonal_unimodular(),
               "section " + std::to_string(s) + " n=" + std::to_string(n));
    }
  }
  return "20 sections each over the three- and four-letter families";
}

}  // namespace

std::vector<AcceptanceResult> run_acceptance() {
  std::vector<AcceptanceResult> out;
  out.push_back(run_criterion(1, "basis tree count equals n^(n-1), n=1..6", 5, crit_basis_rank));
  out.push_back(
      run_criterion(2, "product basis count equals (n+1)^(n-1), n=1..5 + convolution", 10,
                    crit_poisson_rank));
  out.push_back(run_criterion(3, "bracket normalization: basis keys + pairing oracle", 60, crit_lc));
  out.push_back(
      run_criterion(4, "pairing matrix upper triangular with unit diagonal, n=2..5", 120, crit_matrix));
  out.push_back(
      run_criterion(5, "pairing annihilates generated relation combos", 0, crit_relation_pairing));
  out.push_back(
      run_criterion(6, "normalization annihilates sampled relation combos", 0, crit_relation_audit));
  out.push_back(
      run_criterion(7, "oriented normalization: zeros, fixed points, pairing oracle", 0, crit_eil));
  out.push_back(
      run_criterion(8, "increasing-edge counts match the product polynomial", 60, crit_counting));
  out.push_back(
      run_criterion(9, "product pairing: cross-partition zeros + Kronecker blocks", 0, crit_com));
  out.push_back(
      run_criterion(10, "random fiber sections triangularize the pairing", 0, crit_sections));
  return out;
}

}  // namespace liebra
