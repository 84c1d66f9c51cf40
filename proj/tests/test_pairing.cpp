// Tests for the graph/monomial pairing, its matrix on the distinguished
// bases, and the relation elements that must pair to zero.
//
// Coverage: nadir lookup, hand-computed pair values, sign convention,
// degenerate cases, triangularity and unimodularity, annihilation of
// identity elements on both sides.

#include "liebra/pairing.hpp"

#include <doctest.h>

#include "liebra/orders.hpp"

#include <string>
#include <vector>

using namespace liebra;

namespace {

OrientedGraph arcs(int n, const std::vector<Arc>& as) {
    OrientedGraph g = OrientedGraph::on_alphabet(n);
    for (const Arc& a : as) g.add_edge(a.src, a.dst, a.c);
    g.normalize();
    return g;
}

} // namespace

TEST_CASE("path nadir is the lowest common bracket") {
    const Monomial t = parse_monomial("[[x1,x3],<x2,x4>]");
    CHECK(path_nadir(t, 1, 3).text() == "[x1,x3]");
    CHECK(path_nadir(t, 2, 4).text() == "<x2,x4>");
    CHECK(path_nadir(t, 1, 4).text() == t.text());
    CHECK_THROWS_AS(path_nadir(t, 1, 5), DomainError);
}

TEST_CASE("two-letter pair values are hand-checked") {
    // Red arc 1>2 against [x1,x2]: source leaf 1 sits in the left subtree.
    CHECK(pair_value(arcs(2, {Arc(1, 2, Color::Red)}), parse_monomial("[x1,x2]")) == 1);
    // Reversed arc: source leaf 2 sits in the right subtree, one crossing.
    CHECK(pair_value(arcs(2, {Arc(2, 1, Color::Red)}), parse_monomial("[x1,x2]")) == -1);
    // Blue arc on a blue bracket: consistent arc is 2>1, source on the right.
    CHECK(pair_value(arcs(2, {Arc(2, 1, Color::Blue)}), parse_monomial("<x1,x2>")) == -1);
    CHECK(pair_value(arcs(2, {Arc(1, 2, Color::Blue)}), parse_monomial("<x1,x2>")) == 1);
    // Color mismatch kills the pairing.
    CHECK(pair_value(arcs(2, {Arc(1, 2, Color::Red)}), parse_monomial("<x1,x2>")) == 0);
}

TEST_CASE("beta map reports its diagnosis") {
    const Monomial t = parse_monomial("[x1,[x2,x3]]");
    // Arcs 1>2 red and 2>3 red: nadirs are the whole tree and the inner node.
    BetaResult ok = beta_map(arcs(3, {Arc(1, 2, Color::Red), Arc(2, 3, Color::Red)}), t);
    CHECK(ok.is_bijection);
    CHECK(ok.color_preserving);
    CHECK(ok.ccw_count == 0);
    REQUIRE(ok.assignment.size() == 2);

    // Both arcs land on the same nadir: not a bijection.
    BetaResult dup = beta_map(arcs(3, {Arc(1, 2, Color::Red), Arc(1, 3, Color::Red)}), t);
    CHECK_FALSE(dup.is_bijection);

    // Right color multiset, wrong node: [x2,x3] nadir gets a blue arc.
    BetaResult mis = beta_map(arcs(3, {Arc(1, 2, Color::Red), Arc(2, 3, Color::Blue)}), t);
    CHECK(mis.is_bijection);
    CHECK_FALSE(mis.color_preserving);
}

TEST_CASE("arc and edge counts must match") {
    CHECK(pair_value(arcs(3, {Arc(1, 2, Color::Red)}), parse_monomial("[x1,[x2,x3]]")) == 0);
    CHECK_THROWS_AS(pair_value(arcs(2, {Arc(1, 2, Color::Red)}), parse_monomial("[x1,[x2,x3]]")),
                    DomainError);
}

TEST_CASE("sign counts arcs entering their nadir from the right") {
    // [x1,[x2,x3]] with arcs 2>1 red (nadir = top, source 2 on the right)
    // and 2>3 red (nadir = inner, source 2 on the left).
    const Monomial t = parse_monomial("[x1,[x2,x3]]");
    const OrientedGraph g = arcs(3, {Arc(2, 1, Color::Red), Arc(2, 3, Color::Red)});
    BetaResult r = beta_map(g, t);
    CHECK(r.is_bijection);
    CHECK(r.color_preserving);
    CHECK(r.ccw_count == 1);
    CHECK(pair_value(g, t) == -1);
}

TEST_CASE("pair_combo is bilinear") {
    const Monomial m = parse_monomial("[x1,x2]");
    const OrientedGraph g = arcs(2, {Arc(1, 2, Color::Red)});
    GraphCombo gc(g, 3);
    MonCombo mc(m, -2);
    CHECK(pair_combo(gc, mc) == -6);
}

TEST_CASE("pairing matrix on the distinguished bases is triangular") {
    // Triangularity holds for orders extending the index order.
    for (int n = 2; n <= 4; ++n) {
        const PairingMatrix pm = pairing_matrix(linear_extension(n));
        CHECK(pm.dim() == static_cast<int>(ipow(n, n - 1)));
        CHECK(pm.upper_triangular());
        CHECK(pm.diagonal_unimodular());
        CHECK(pm.lower_violations().empty());
        for (int i = 0; i < pm.dim(); ++i) {
            CHECK((pm.at(i, i) == 1 || pm.at(i, i) == -1));
        }
    }
}

TEST_CASE("column variant reproduces the default matrix") {
    const auto order = enumerate_basis_trees(3);
    std::vector<Monomial> cols;
    for (const ColoredGraph& g : order) cols.push_back(basis_monomial(g));
    const PairingMatrix a = pairing_matrix(order);
    const PairingMatrix b = pairing_matrix_columns(order, cols);
    CHECK(a.entries == b.entries);
}

TEST_CASE("monomial-side identity elements pair to zero against every tree") {
    for (RelKind k : kAllRelKinds) {
        const auto elems = theta_exhaustive(3, k);
        CHECK(!elems.empty());
        for (const RelationElement& e : elems)
            for (const ColoredGraph& g : enumerate_basis_trees(3)) {
                const GraphCombo one(consistent_orientation(g), 1);
                CHECK(pair_combo(one, e.combo) == 0);
            }
    }
}

TEST_CASE("graph-side identity elements pair to zero against every monomial") {
    for (GammaKind k : kAllGammaKinds) {
        const auto elems = gamma_exhaustive_3(k);
        CHECK(!elems.empty());
        for (const GammaElement& e : elems)
            for (const Monomial& m : enumerate_monomials(3)) {
                CHECK(pair_combo(e.combo, MonCombo(m, 1)) == 0);
            }
    }
}

TEST_CASE("random relation elements keep pairing to zero at n=4") {
    Rng rng(99);
    const auto rows = enumerate_basis_trees(4);
    for (RelKind k : kAllRelKinds) {
        for (int i = 0; i < 25; ++i) {
            const RelationElement e = theta_random(k, 4, rng);
            for (int j = 0; j < 8; ++j) {
                const ColoredGraph& g = pick(rows, rng);
                CHECK(pair_combo(GraphCombo(consistent_orientation(g), 1), e.combo) == 0);
            }
        }
    }
    const auto mons = enumerate_monomials(4);
    for (GammaKind k : kAllGammaKinds) {
        for (int i = 0; i < 25; ++i) {
            const GammaElement e = gamma_random(k, 4, rng);
            for (int j = 0; j < 8; ++j) {
                CHECK(pair_combo(e.combo, MonCombo(pick(mons, rng), 1)) == 0);
            }
        }
    }
}
