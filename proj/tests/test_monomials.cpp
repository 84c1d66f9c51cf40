// Tests for bracket monomials: construction, parsing, enumeration, the
// bracket graph, and the distinguished monomial of a pattern-free tree.
//
// Coverage: text round trips, parse errors with byte offsets, multilinearity
// guards, family sizes, graphical roots, substitution, membership tests.

#include "liebra/monomial.hpp"

#include <doctest.h>

#include <set>
#include <string>
#include <vector>

using namespace liebra;

namespace {

long long monomial_family_size(int m) {
    // Catalan(m-1) * m! * 2^(m-1)
    static const long long catalan[] = {1, 1, 2, 5, 14, 42};
    long long fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    return catalan[m - 1] * fact * (1LL << (m - 1));
}

} // namespace

TEST_CASE("letters and brackets print canonically") {
    const Monomial x1 = Monomial::letter(1);
    const Monomial x2 = Monomial::letter(2);
    CHECK(x1.text() == "x1");
    CHECK(x1.is_letter());
    CHECK(x1.letter_index() == 1);
    CHECK(x1.degree() == 1);
    CHECK(x1.mask() == 1);

    const Monomial red = Monomial::bracket(Color::Red, x1, x2);
    CHECK(red.text() == "[x1,x2]");
    CHECK(red.color() == Color::Red);
    CHECK(red.left() == x1);
    CHECK(red.right() == x2);
    CHECK(red.degree() == 2);
    CHECK(red.support() == std::vector<int>{1, 2});

    const Monomial blue = Monomial::bracket(Color::Blue, x2, x1);
    CHECK(blue.text() == "<x2,x1>");
}

TEST_CASE("brackets with overlapping letters are rejected") {
    const Monomial x1 = Monomial::letter(1);
    CHECK_THROWS_WITH_AS(Monomial::bracket(Color::Red, x1, x1),
                         "multilinearity violation: x1 appears twice", DomainError);
    const Monomial m = parse_monomial("[x1,x2]");
    CHECK_THROWS_AS(Monomial::bracket(Color::Blue, m, Monomial::letter(2)), DomainError);
}

TEST_CASE("graphical root takes min over red, max over blue") {
    CHECK(parse_monomial("x3").graphical_root() == 3);
    CHECK(parse_monomial("[x2,x3]").graphical_root() == 2);
    CHECK(parse_monomial("<x2,x3>").graphical_root() == 3);
    CHECK(parse_monomial("[<x1,x4>,x2]").graphical_root() == 2);
    CHECK(parse_monomial("<[x3,x5],x2>").graphical_root() == 3);
}

TEST_CASE("parsing round-trips every text form") {
    const std::vector<std::string> texts{
        "x1", "x17", "[x1,x2]", "<x1,x2>", "[[x1,x3],x2]", "<x1,<x2,x3>>",
        "[<x2,x4>,[x1,x3]]",
    };
    for (const std::string& s : texts) CHECK(parse_monomial(s).text() == s);
}

TEST_CASE("parse errors carry the byte offset") {
    CHECK_THROWS_WITH_AS(parse_monomial(""), "parse error at byte 0: expected 'x', '[' or '<'",
                         DomainError);
    CHECK_THROWS_WITH_AS(parse_monomial("y1"), "parse error at byte 0: expected 'x', '[' or '<'",
                         DomainError);
    CHECK_THROWS_WITH_AS(parse_monomial("x"), "parse error at byte 1: expected digits after 'x'",
                         DomainError);
    CHECK_THROWS_WITH_AS(parse_monomial("[x1,x2"), "parse error at byte 6: expected ']'",
                         DomainError);
    CHECK_THROWS_WITH_AS(parse_monomial("<x1,x2]"), "parse error at byte 6: expected '>'",
                         DomainError);
    CHECK_THROWS_WITH_AS(parse_monomial("[x1;x2]"), "parse error at byte 3: expected ','",
                         DomainError);
    CHECK_THROWS_WITH_AS(parse_monomial("x1 x2"), "parse error at byte 3: trailing input",
                         DomainError);
    CHECK_THROWS_WITH_AS(parse_monomial("x0"),
                         "parse error at byte 2: letter index out of range 1..64", DomainError);
    CHECK_THROWS_WITH_AS(parse_monomial("x65"),
                         "parse error at byte 2: letter index out of range 1..64", DomainError);
    CHECK_THROWS_WITH_AS(parse_monomial("[x1,x1]"), "multilinearity violation: x1 appears twice",
                         DomainError);
}

TEST_CASE("whitespace is tolerated between tokens") {
    CHECK(parse_monomial(" [ x1 , x2 ] ").text() == "[x1,x2]");
    CHECK(parse_monomial("< x1,\tx2 >").text() == "<x1,x2>");
}

TEST_CASE("monomial family sizes follow the closed form") {
    for (int m = 1; m <= 4; ++m) {
        const auto fam = enumerate_monomials(m);
        CHECK(static_cast<long long>(fam.size()) == monomial_family_size(m));
        std::set<std::string> texts;
        for (const Monomial& x : fam) texts.insert(x.text());
        CHECK(texts.size() == fam.size());
    }
    CHECK(enumerate_monomials(1).at(0).text() == "x1");
}

TEST_CASE("enumeration respects an arbitrary letter set") {
    const auto fam = enumerate_monomials_on({2, 7});
    REQUIRE(fam.size() == 4);
    std::set<std::string> texts;
    for (const Monomial& x : fam) texts.insert(x.text());
    CHECK(texts.count("[x2,x7]"));
    CHECK(texts.count("<x7,x2>"));
}

TEST_CASE("relabel and map_letters rename leaves") {
    const Monomial m = parse_monomial("[<x1,x3>,x2]");
    CHECK(relabel(m, {4, 5, 9}).text() == "[<x4,x9>,x5]");
    CHECK(map_letters(m, {{1, 2}, {2, 3}, {3, 1}}).text() == "[<x2,x1>,x3]");
}

TEST_CASE("substitute grafts a monomial at a leaf") {
    const Monomial m = parse_monomial("[x1,x2]");
    const Monomial s = parse_monomial("<x3,x4>");
    CHECK(substitute(m, 2, s).text() == "[x1,<x3,x4>]");
    CHECK_THROWS_AS(substitute(m, 2, parse_monomial("<x1,x4>")), DomainError);
    CHECK(substitute(m, 5, s) == m);  // absent leaf: no-op
}

TEST_CASE("bracket graph joins graphical roots") {
    CHECK(bracket_graph(parse_monomial("[x1,x2]")).line() == "[1,2] r1-2");
    CHECK(bracket_graph(parse_monomial("<x1,x2>")).line() == "[1,2] b1-2");
    // [[x1,x3],x2]: inner red joins 1-3, outer red joins roots 1 and 2.
    CHECK(bracket_graph(parse_monomial("[[x1,x3],x2]")).line() == "[1,2,3] r1-2 r1-3");
    // <x1,<x2,x3>>: inner blue joins 2-3 (root 3), outer blue joins 1 and 3.
    CHECK(bracket_graph(parse_monomial("<x1,<x2,x3>>")).line() == "[1,2,3] b1-3 b2-3");
}

TEST_CASE("distinguished monomials of the n=2 family") {
    ColoredGraph r = ColoredGraph::on_alphabet(2);
    r.add_edge(1, 2, Color::Red);
    CHECK(basis_monomial(r).text() == "[x1,x2]");
    ColoredGraph b = ColoredGraph::on_alphabet(2);
    b.add_edge(1, 2, Color::Blue);
    CHECK(basis_monomial(b).text() == "<x1,x2>");
}

TEST_CASE("distinguished monomials of the n=3 family are the known nine") {
    std::set<std::string> got;
    for (const ColoredGraph& g : enumerate_basis_trees(3)) {
        const Monomial m = basis_monomial(g);
        CHECK(is_basis_monomial(m));
        CHECK(bracket_graph(m).line() == g.line());
        got.insert(m.text());
    }
    const std::set<std::string> expect{
        "[x1,[x2,x3]]", "[x1,<x2,x3>]", "[x2,<x1,x3>]",
        "[[x1,x3],x2]", "[<x1,x2>,x3]",
        "<[x1,x2],x3>", "<[x1,x3],x2>", "<<x1,x2>,x3>", "<x2,<x1,x3>>",
    };
    CHECK(got == expect);
}

TEST_CASE("membership test explains failures") {
    std::string why;
    CHECK_FALSE(is_basis_monomial(parse_monomial("[x2,x1]"), &why));
    CHECK_FALSE(why.empty());
    CHECK(is_basis_monomial(parse_monomial("[x1,x2]")));

    // Counting members among all degree-3 monomials recovers the family size.
    int members = 0;
    for (const Monomial& m : enumerate_monomials(3))
        if (is_basis_monomial(m)) ++members;
    CHECK(members == 9);
}

TEST_CASE("random monomials are valid, multilinear, and reproducible") {
    Rng a(7), b(7);
    const std::vector<int> letters{1, 2, 3, 4, 5};
    for (int i = 0; i < 100; ++i) {
        const Monomial m = random_monomial_on(letters, a);
        CHECK(m == random_monomial_on(letters, b));
        CHECK(m.support() == letters);
        CHECK(parse_monomial(m.text()) == m);
    }
}
