// Tests for normalization into the distinguished basis and for the defining
// identities of the two-bracket algebra.
//
// Coverage: pinned expansions, fixed points, idempotence, sign rules,
// identity instances normalizing to zero, exhaustive 3-letter audits.

#include "liebra/rewrite.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace liebra;

namespace {

MonCombo nf(const std::string& s) { return lc_normalize(parse_monomial(s)); }

bool all_keys_basic(const MonCombo& c) {
    for (const auto& [m, coef] : c) {
        (void)coef;
        if (!is_basis_monomial(m)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("letters and basis monomials are fixed points") {
    CHECK(nf("x1") == MonCombo(parse_monomial("x1"), 1));
    for (const ColoredGraph& g : enumerate_basis_trees(3)) {
        const Monomial b = basis_monomial(g);
        CHECK(lc_normalize(b) == MonCombo(b, 1));
    }
}

TEST_CASE("swapping a bracket flips the sign") {
    MonCombo red = nf("[x2,x1]");
    CHECK(red == MonCombo(parse_monomial("[x1,x2]"), -1));
    MonCombo blue = nf("<x2,x1>");
    CHECK(blue == MonCombo(parse_monomial("<x1,x2>"), -1));
}

TEST_CASE("pinned red-in-red expansion") {
    // [[x1,x2],x3] = [[x1,x3],x2] + [x1,[x2,x3]]
    MonCombo c = nf("[[x1,x2],x3]");
    REQUIRE(c.size() == 2);
    CHECK(c.coeff(parse_monomial("[[x1,x3],x2]")) == 1);
    CHECK(c.coeff(parse_monomial("[x1,[x2,x3]]")) == 1);
}

TEST_CASE("pinned blue-in-blue expansion") {
    // <x1,<x2,x3>> = <x2,<x1,x3>> + <<x1,x2>,x3> (rotation of the inner slot)
    MonCombo c = nf("<x1,<x2,x3>>");
    REQUIRE(c.size() == 2);
    CHECK(c.coeff(parse_monomial("<x2,<x1,x3>>")) == 1);
    CHECK(c.coeff(parse_monomial("<<x1,x2>,x3>")) == 1);
}

TEST_CASE("normalization lands in the basis and is idempotent") {
    for (const Monomial& m : enumerate_monomials(3)) {
        const MonCombo c = lc_normalize(m);
        CHECK(all_keys_basic(c));
        CHECK(lc_normalize_combo(c) == c);
    }
    Rng rng(5);
    const std::vector<int> letters{1, 2, 3, 4, 5};
    for (int i = 0; i < 200; ++i) {
        const MonCombo c = lc_normalize(random_monomial_on(letters, rng));
        CHECK(all_keys_basic(c));
    }
}

TEST_CASE("normalizing a combo is linear") {
    const MonCombo a = nf("[[x1,x2],x3]");
    const MonCombo b = nf("<x1,<x2,x3>>");
    MonCombo sum(parse_monomial("[[x1,x2],x3]"), 2);
    sum.add(parse_monomial("<x1,<x2,x3>>"), -3);
    CHECK(lc_normalize_combo(sum) == 2 * a - 3 * b);
}

TEST_CASE("relation kinds have stable names") {
    for (RelKind k : kAllRelKinds) {
        CHECK(rel_kind_from_name(rel_kind_name(k)) == k);
    }
    CHECK(std::string(rel_kind_name(RelKind::MJ)) == "MJ");
    CHECK_THROWS_AS(rel_kind_from_name("nope"), DomainError);
}

TEST_CASE("identity instances normalize to zero") {
    const Monomial x1 = parse_monomial("x1");
    const Monomial x2 = parse_monomial("x2");
    const Monomial x3 = parse_monomial("x3");
    CHECK(lc_normalize_combo(relation_combo(RelKind::S1, {x1, x2})).empty());
    CHECK(lc_normalize_combo(relation_combo(RelKind::S2, {x1, x2})).empty());
    CHECK(lc_normalize_combo(relation_combo(RelKind::J1, {x1, x2, x3})).empty());
    CHECK(lc_normalize_combo(relation_combo(RelKind::J2, {x1, x2, x3})).empty());
    CHECK(lc_normalize_combo(relation_combo(RelKind::MJ, {x1, x2, x3})).empty());
    // Compound slots must vanish too.
    const Monomial big = parse_monomial("<x2,x4>");
    CHECK(lc_normalize_combo(relation_combo(RelKind::MJ, {x3, big, x1})).empty());
}

TEST_CASE("slot arity is enforced") {
    const Monomial x1 = parse_monomial("x1");
    const Monomial x2 = parse_monomial("x2");
    CHECK_THROWS_AS(relation_combo(RelKind::S1, {x1}), DomainError);
    CHECK_THROWS_AS(relation_combo(RelKind::J1, {x1, x2}), DomainError);
}

TEST_CASE("exhaustive 3-letter audits pass for every kind") {
    for (RelKind k : kAllRelKinds) {
        const auto rels = exhaustive_relations_3(k);
        CHECK(!rels.empty());
        for (const RelationElement& r : rels) {
            CHECK(r.kind == k);
            CHECK(relation_audit(r));
        }
    }
}

TEST_CASE("random relations audit clean across alphabet sizes") {
    for (RelKind k : kAllRelKinds) {
        Rng rng(11);
        for (int n = 3; n <= 5; ++n) {
            for (int i = 0; i < 50; ++i) {
                const RelationElement r = random_relation(k, n, rng);
                CHECK(r.kind == k);
                CHECK(relation_audit(r));
            }
        }
    }
}
