// Tests for product monomials, the forest basis, the derivation-rule
// normalization, the product-side pairing, and the block-matrix certificate.
//
// Coverage: canonical product texts, parser round trips, partition and
// forest counts, pinned derivation expansions, pairing hand-checks and
// degeneracy, identity generators, block structure, the counting recurrence.

#include "liebra/poisson.hpp"

#include <doctest.h>

#include "liebra/pairing.hpp"

#include <algorithm>
#include <set>
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

TEST_CASE("product monomials print with sorted factors and no parentheses") {
    CHECK(parse_poisson("x1").text() == "x1");
    CHECK(parse_poisson("x2*x1").text() == "x1*x2");
    CHECK(parse_poisson("(x2)*x1").text() == "x1*x2");
    CHECK(parse_poisson("x3*[x2,x4]*x1").text() == "x1*[x2,x4]*x3");
    CHECK(parse_poisson("[x2*x3,x1]").text() == "[x2*x3,x1]");
    CHECK(parse_poisson("x2*<x5,x1*x4>").text() == "<x5,x1*x4>*x2");
    // A seven-letter nested shape round-trips.
    const std::string big = "x1*[x2*x3*x4,<x5,x6*x7>]";
    CHECK(parse_poisson(big).text() == big);
}

TEST_CASE("poisson parse errors match the bracket grammar") {
    CHECK_THROWS_WITH_AS(parse_poisson(""), "parse error at byte 0: expected 'x', '[', '<' or '('",
                         DomainError);
    CHECK_THROWS_WITH_AS(parse_poisson("x1*"), "parse error at byte 3: expected 'x', '[', '<' or '('",
                         DomainError);
    CHECK_THROWS_WITH_AS(parse_poisson("(x1"), "parse error at byte 3: expected ')'", DomainError);
    CHECK_THROWS_WITH_AS(parse_poisson("x1*x1"), "multilinearity violation: x1 appears twice",
                         DomainError);
    CHECK_THROWS_WITH_AS(parse_poisson("[x1*x2,x2]"), "multilinearity violation: x2 appears twice",
                         DomainError);
}

TEST_CASE("factors and products know their structure") {
    const PoissonMonomial pm = parse_poisson("x3*[x1,x2*x4]");
    CHECK(pm.degree() == 4);
    CHECK(pm.support() == std::vector<int>{1, 2, 3, 4});
    REQUIRE(pm.factors().size() == 2);
    // Factors sort by their smallest letter: the bracket holds x1.
    const PoissonFactor& f = pm.factors()[0];
    CHECK_FALSE(f.is_letter());
    CHECK(f.color() == Color::Red);
    CHECK(f.left().text() == "x1");
    CHECK(f.right().text() == "x2*x4");
    CHECK_FALSE(f.is_lie());
    CHECK(pm.factors()[1].is_letter());

    const PoissonFactor lie = PoissonFactor::from_lie(parse_monomial("[x1,<x2,x3>]"));
    CHECK(lie.is_lie());
    CHECK(lie.lie().text() == "[x1,<x2,x3>]");
}

TEST_CASE("lie monomials embed as single factors") {
    const Monomial m = parse_monomial("<[x1,x3],x2>");
    CHECK(PoissonMonomial::from_lie(m).text() == m.text());
    CHECK(PoissonMonomial::from_lie(m).factors().size() == 1);
}

TEST_CASE("set partitions are ordered and counted by Bell numbers") {
    CHECK(set_partitions({1}).size() == 1);
    CHECK(set_partitions({1, 2}).size() == 2);
    CHECK(set_partitions({1, 2, 3}).size() == 5);
    CHECK(set_partitions({1, 2, 3, 4}).size() == 15);
    for (const auto& part : set_partitions({1, 2, 3, 4})) {
        for (size_t b = 1; b < part.size(); ++b) CHECK(part[b - 1].back() < part[b].back());
    }
}

TEST_CASE("forest counts follow (n+1)^(n-1)") {
    const long long expect[] = {0, 1, 3, 16, 125};
    for (int n = 1; n <= 4; ++n) {
        const auto forests = enumerate_forests(n);
        CHECK(static_cast<long long>(forests.size()) == expect[n]);
        for (const Forest& f : forests)
            for (const ColoredGraph& t : f) CHECK(is_basis_tree(t));
    }
    CHECK(enumerate_forests(5).size() == 1296);
}

TEST_CASE("two-letter product basis is pinned") {
    const auto basis = poisson_basis(2);
    std::set<std::string> texts;
    for (const PoissonMonomial& b : basis) texts.insert(b.text());
    CHECK(texts == std::set<std::string>{"x1*x2", "[x1,x2]", "<x1,x2>"});
}

TEST_CASE("product basis elements are fixed points of normalization") {
    for (int n = 1; n <= 3; ++n) {
        for (const PoissonMonomial& b : poisson_basis(n)) {
            CHECK(poisson_normalize(b) == PoisCombo(b, 1));
        }
    }
}

TEST_CASE("enumerated product monomials cover all partitions") {
    const long long expect[] = {0, 1, 5, 61};  // sum over partitions of bracket counts
    for (int n = 1; n <= 3; ++n) {
        const auto all = enumerate_poisson_monomials(n);
        CHECK(static_cast<long long>(all.size()) == expect[n]);
        std::set<std::string> texts;
        for (const PoissonMonomial& pm : all) {
            texts.insert(pm.text());
            CHECK(parse_poisson(pm.text()) == pm);
        }
        CHECK(texts.size() == all.size());
    }
}

TEST_CASE("pinned derivation expansion") {
    // [x1, x2*x3] = [x1,x2]*x3 + x2*[x1,x3]
    const PoisCombo c = poisson_normalize(parse_poisson("[x1,x2*x3]"));
    REQUIRE(c.size() == 2);
    CHECK(c.coeff(parse_poisson("[x1,x2]*x3")) == 1);
    CHECK(c.coeff(parse_poisson("[x1,x3]*x2")) == 1);
    // Commutativity is structural: x2*x1 is already the basis element x1*x2.
    CHECK(poisson_normalize(parse_poisson("x2*x1")) ==
          PoisCombo(parse_poisson("x1*x2"), 1));
    // The blue bracket obeys the same rule.
    const PoisCombo b = poisson_normalize(parse_poisson("<x1*x2,x3>"));
    REQUIRE(b.size() == 2);
    CHECK(b.coeff(parse_poisson("<x1,x3>*x2")) == 1);
    CHECK(b.coeff(parse_poisson("<x2,x3>*x1")) == 1);
}

TEST_CASE("normalization keys are basis elements") {
    const auto basis = poisson_basis(3);
    for (const PoissonMonomial& pm : enumerate_poisson_monomials(3)) {
        const PoisCombo c = poisson_normalize(pm);
        for (const auto& [k, coeff] : c) {
            (void)coeff;
            CHECK(std::find(basis.begin(), basis.end(), k) != basis.end());
        }
        CHECK(poisson_normalize_combo(c) == c);
    }
}

TEST_CASE("product pairing extends the bracket pairing") {
    for (const ColoredGraph& g : enumerate_basis_trees(3)) {
        const OrientedGraph o = consistent_orientation(g);
        for (const Monomial& m : enumerate_monomials(3)) {
            CHECK(pair_com(o, PoissonMonomial::from_lie(m)) == pair_value(o, m));
        }
    }
}

TEST_CASE("product pairing hand checks") {
    // Empty graph against the plain product.
    CHECK(pair_com(OrientedGraph::on_alphabet(2), parse_poisson("x1*x2")) == 1);
    // Edge count must match the bracket count.
    CHECK(pair_com(OrientedGraph::on_alphabet(2), parse_poisson("[x1,x2]")) == 0);
    CHECK(pair_com(arcs(2, {Arc(1, 2, Color::Red)}), parse_poisson("x1*x2")) == 0);
    // An arc across two factors has no bracket to land on.
    CHECK(pair_com(arcs(3, {Arc(1, 2, Color::Red)}), parse_poisson("[x1,x2]*x3")) == 1);
    CHECK(pair_com(arcs(3, {Arc(1, 3, Color::Red)}), parse_poisson("[x1,x2]*x3")) == 0);
    // Worked seven-letter value.
    const OrientedGraph g = arcs(7, {Arc(3, 6, Color::Red), Arc(5, 7, Color::Blue)});
    CHECK(pair_com(g, parse_poisson("x1*[x2*x3*x4,<x5,x6*x7>]")) == 1);
    // Alphabet mismatch is a domain error.
    CHECK_THROWS_AS(pair_com(arcs(2, {Arc(1, 2, Color::Red)}), parse_poisson("x1*x3")),
                    DomainError);
}

TEST_CASE("identity generators vanish in normalization and in the pairing") {
    const auto rows = com_rows(3);
    for (QbtRelKind k : kAllQbtRelKinds) {
        const auto gens = qbt_relation_generators(3, k);
        CHECK(!gens.empty());
        for (const PoisCombo& c : gens) {
            CHECK(poisson_normalize_combo(c).empty());
            for (const OrientedGraph& row : rows) {
                CHECK(pair_com_combo(row, c) == 0);
            }
        }
    }
}

TEST_CASE("rows are one disconnected graph per forest") {
    const auto rows = com_rows(3);
    CHECK(rows.size() == 16);
    const auto rows2 = com_rows(2);
    REQUIRE(rows2.size() == 3);
    std::set<std::string> lines;
    for (const OrientedGraph& r : rows2) lines.insert(r.line());
    CHECK(lines.count("[1,2]"));
    CHECK(lines.count("[1,2] r1>2"));
    CHECK(lines.count("[1,2] b2>1"));
}

TEST_CASE("non-forest graphs pair to zero against every basis product") {
    const auto basis = poisson_basis(3);
    const std::vector<OrientedGraph> bad = {
        arcs(3, {Arc(1, 2, Color::Red), Arc(2, 3, Color::Red), Arc(1, 3, Color::Red)}),
        arcs(3, {Arc(1, 2, Color::Red), Arc(1, 2, Color::Blue)}),
        arcs(3, {Arc(1, 2, Color::Red), Arc(2, 1, Color::Red)}),
    };
    for (const OrientedGraph& g : bad)
        for (const PoissonMonomial& b : basis) CHECK(pair_com(g, b) == 0);
}

TEST_CASE("two-letter block matrix certificate") {
    const ComMatrixReport rep = com_matrix(2);
    CHECK(rep.n == 2);
    CHECK(rep.dim == 3);
    CHECK(rep.cross_zero);
    CHECK(rep.blocks_ok);
    REQUIRE(rep.diagonal.size() == 2);
    // Partition {1}{2} gives the trivial 1x1 block, {1,2} the 2x2 bracket block.
    CHECK(rep.diagonal[0].dim * rep.diagonal[1].dim == 2);
    for (const ComBlockReport& b : rep.diagonal) {
        CHECK(b.kronecker_ok);
        CHECK(b.unimodular_ok);
    }
}

TEST_CASE("three-letter block matrix certificate") {
    const ComMatrixReport rep = com_matrix(3);
    CHECK(rep.dim == 16);
    CHECK(rep.cross_zero);
    CHECK(rep.blocks_ok);
    std::size_t total = 0;
    for (const ComBlockReport& b : rep.diagonal) total += b.dim;
    CHECK(total == 16);
    CHECK_THROWS_AS(com_matrix(5), DomainError);
}

TEST_CASE("counting recurrence matches the closed form") {
    const ExpFormulaReport rep = exp_formula_check(8);
    CHECK(rep.ok);
    REQUIRE(rep.convolution.size() == 8);
    CHECK(rep.convolution == rep.closed_form);
    CHECK(rep.closed_form.back() == 4782969);  // 9^7
    CHECK(rep.convolution[2] == 16);
}

TEST_CASE("random product monomials are valid and reproducible") {
    Rng a(3), b(3);
    const std::vector<int> letters{1, 2, 3, 4, 5, 6};
    for (int i = 0; i < 60; ++i) {
        const PoissonMonomial x = random_poisson_monomial(letters, a);
        CHECK(x == random_poisson_monomial(letters, b));
        CHECK(x.support() == letters);
        CHECK(parse_poisson(x.text()) == x);
    }
}
