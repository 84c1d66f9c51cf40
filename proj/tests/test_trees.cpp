// Tests for labeled tree enumeration, orientation, and the pattern-avoiding
// two-colored family.
//
// Coverage: Cayley counts, rooted round trips, consistent orientation,
// pattern detection, family membership, relabeling, rooted views.

#include "liebra/trees.hpp"

#include <doctest.h>

#include <set>
#include <string>
#include <vector>

using namespace liebra;

namespace {

ColoredGraph chain3() {
    ColoredGraph g = ColoredGraph::on_alphabet(3);
    g.add_edge(1, 2, Color::Red);
    g.add_edge(2, 3, Color::Blue);
    g.normalize();
    return g;
}

} // namespace

TEST_CASE("labeled trees are counted by n^(n-2)") {
    const int expect[] = {0, 1, 1, 3, 16, 125, 1296};
    for (int n = 1; n <= 6; ++n) {
        int count = 0;
        for_each_labeled_tree(n, [&](const std::vector<std::pair<int, int>>& es) {
            CHECK(es.size() == static_cast<size_t>(n - 1));
            ++count;
        });
        CHECK(count == expect[n]);
    }
}

TEST_CASE("rooted trees are counted by n^(n-1)") {
    const int expect[] = {0, 1, 2, 9, 64, 625};
    for (int n = 1; n <= 5; ++n) {
        CHECK(static_cast<int>(enumerate_rooted_trees(n).size()) == expect[n]);
    }
}

TEST_CASE("rooted <-> colored round trip preserves structure") {
    for (int n = 1; n <= 4; ++n) {
        for (const RootedTree& t : enumerate_rooted_trees(n)) {
            const ColoredGraph g = colored_from_rooted(t);
            CHECK(g.vertices.size() == static_cast<size_t>(n));
            CHECK(g.edges.size() == static_cast<size_t>(n - 1));
            CHECK(is_basis_tree(g));
            const RootedTree back = rooted_from_colored(g);
            CHECK(back.root == t.root);
            CHECK(back.parent == t.parent);
        }
    }
}

TEST_CASE("edge colors encode parent-child comparisons") {
    // Root 1, children 2 and 3: both edges increasing, so red.
    RootedTree t;
    t.n = 3;
    t.root = 1;
    t.parent = {0, 0, 1, 1};
    const ColoredGraph g = colored_from_rooted(t);
    for (const Edge& e : g.edges) CHECK(e.c == Color::Red);

    // Root 3, children 1 and 2: both edges decreasing, so blue.
    RootedTree s;
    s.n = 3;
    s.root = 3;
    s.parent = {0, 3, 3, 0};
    const ColoredGraph h = colored_from_rooted(s);
    for (const Edge& e : h.edges) CHECK(e.c == Color::Blue);
}

TEST_CASE("consistent orientation of a family tree has a single source") {
    for (int n = 2; n <= 5; ++n) {
        for (const ColoredGraph& g : enumerate_basis_trees(n)) {
            const OrientedGraph o = consistent_orientation(g);
            CHECK(is_consistent(o));
            CHECK(sources(o).size() == 1);
            CHECK(underlying_colored(o).line() == g.line());
        }
    }
}

TEST_CASE("orientation rule: red points up, blue points down") {
    const OrientedGraph o = consistent_orientation(chain3());
    for (const Arc& a : o.edges) {
        if (a.c == Color::Red) CHECK(a.src < a.dst);
        else CHECK(a.src > a.dst);
    }
    CHECK(sources(o) == std::vector<int>{1, 3});
}

TEST_CASE("pattern violations match family membership on all colored trees") {
    for (int n = 2; n <= 5; ++n) {
        std::set<std::string> family;
        for (const ColoredGraph& g : enumerate_basis_trees(n)) family.insert(g.line());
        long seen = 0;
        for_each_labeled_tree(n, [&](const std::vector<std::pair<int, int>>& es) {
            const size_t m = es.size();
            for (size_t bits = 0; bits < (size_t{1} << m); ++bits) {
                ColoredGraph g = ColoredGraph::on_alphabet(n);
                for (size_t i = 0; i < m; ++i)
                    g.add_edge(es[i].first, es[i].second, (bits >> i) & 1 ? Color::Blue : Color::Red);
                g.normalize();
                ++seen;
                const bool avoids = pattern_violations(g).empty();
                CHECK(avoids == (family.count(g.line()) > 0));
            }
        });
        CHECK(seen > 0);
    }
}

TEST_CASE("each forbidden pattern is detected on its witness") {
    // Two red edges pointing into the largest label.
    ColoredGraph a = ColoredGraph::on_alphabet(3);
    a.add_edge(1, 3, Color::Red);
    a.add_edge(2, 3, Color::Red);
    a.normalize();
    auto va = pattern_violations(a);
    REQUIRE(va.size() == 1);
    CHECK(pattern_tag(va[0].kind) == std::string("1r3r2"));

    // Two blue edges pointing into the smallest label.
    ColoredGraph b = ColoredGraph::on_alphabet(3);
    b.add_edge(1, 2, Color::Blue);
    b.add_edge(1, 3, Color::Blue);
    b.normalize();
    auto vb = pattern_violations(b);
    REQUIRE(vb.size() == 1);
    CHECK(pattern_tag(vb[0].kind) == std::string("2b1b3"));

    // A red and a blue edge pointing into the middle label.
    auto vc = pattern_violations(chain3());
    REQUIRE(vc.size() == 1);
    CHECK(pattern_tag(vc[0].kind) == std::string("1r2b3"));
}

TEST_CASE("family size matches the rooted tree count and entries are distinct") {
    for (int n = 1; n <= 5; ++n) {
        const auto fam = enumerate_basis_trees(n);
        CHECK(fam.size() == enumerate_rooted_trees(n).size());
        std::set<std::string> lines;
        for (const ColoredGraph& g : fam) {
            lines.insert(g.line());
            CHECK(is_basis_tree(g));
        }
        CHECK(lines.size() == fam.size());
    }
}

TEST_CASE("n=2 family is the two single edges") {
    const auto fam = enumerate_basis_trees(2);
    REQUIRE(fam.size() == 2);
    std::set<std::string> lines;
    for (const ColoredGraph& g : fam) lines.insert(g.line());
    CHECK(lines.count("[1,2] r1-2"));
    CHECK(lines.count("[1,2] b1-2"));
}

TEST_CASE("relabel maps a graph onto new sorted labels") {
    const ColoredGraph h = relabel(chain3(), {2, 5, 7});
    CHECK(h.vertices == std::vector<int>{2, 5, 7});
    REQUIRE(h.edges.size() == 2);
    CHECK(h.line() == "[2,5,7] r2-5 b5-7");
}

TEST_CASE("rooted view exposes children and subtrees") {
    ColoredGraph g = ColoredGraph::on_alphabet(3);
    g.add_edge(1, 2, Color::Red);
    g.add_edge(1, 3, Color::Red);
    g.normalize();
    const RootedView v = rooted_view(g);
    CHECK(v.root == 1);
    CHECK(v.kids(1) == std::vector<int>{2, 3});
    CHECK(v.kids(2).empty());
    CHECK(v.subtree(2) == std::vector<int>{2});
    CHECK(v.subtree(1) == std::vector<int>{1, 2, 3});
    CHECK(v.edge_color.at(2) == Color::Red);
}

TEST_CASE("components, tree, and multi-edge predicates") {
    ColoredGraph g = ColoredGraph::on_alphabet(4);
    g.add_edge(1, 2, Color::Red);
    g.add_edge(3, 4, Color::Blue);
    g.normalize();
    CHECK(components(g).size() == 2);
    CHECK_FALSE(is_tree(g));
    CHECK_FALSE(has_multi_edge(g));

    ColoredGraph m = ColoredGraph::on_alphabet(2);
    m.add_edge(1, 2, Color::Red);
    m.add_edge(1, 2, Color::Blue);
    m.normalize();
    CHECK(has_multi_edge(m));
    CHECK_FALSE(is_tree(m));
}

TEST_CASE("induced subgraph keeps only inside edges") {
    const ColoredGraph g = chain3();
    const ColoredGraph h = induced(g, {1, 2});
    CHECK(h.vertices == std::vector<int>{1, 2});
    REQUIRE(h.edges.size() == 1);
    CHECK(h.edges[0].c == Color::Red);
    const ColoredGraph k = induced(g, {1, 3});
    CHECK(k.edges.empty());
}

TEST_CASE("random trees are valid and seed-reproducible") {
    Rng a(42), b(42);
    for (int i = 0; i < 50; ++i) {
        const RootedTree s = random_rooted_tree(5, a);
        const RootedTree t = random_rooted_tree(5, b);
        CHECK(s.root == t.root);
        CHECK(s.parent == t.parent);
        CHECK(s.parent[s.root] == 0);
    }
    Rng c(42);
    const std::vector<int> letters{1, 2, 3, 4, 5, 6};
    for (int i = 0; i < 50; ++i) {
        CHECK(is_basis_tree(random_basis_tree(letters, c)));
    }
}
