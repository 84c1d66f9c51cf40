// Tests for the increasing-edge census of rooted trees and its closed form.
//
// Coverage: small-n values, census/polynomial agreement, symmetry, leading
// coefficient, totals, domain guards.

#include "liebra/counting.hpp"
#include "liebra/util.hpp"

#include <doctest.h>

#include <numeric>
#include <vector>

using namespace liebra;

TEST_CASE("small censuses are pinned") {
    CHECK(count_by_increasing_edges(1) == std::vector<long long>{1});
    CHECK(count_by_increasing_edges(2) == std::vector<long long>{1, 1});
    CHECK(count_by_increasing_edges(3) == std::vector<long long>{2, 5, 2});
    CHECK(count_by_increasing_edges(4) == std::vector<long long>{6, 26, 26, 6});
}

TEST_CASE("census equals the closed-form polynomial") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(count_by_increasing_edges(n) == increasing_edge_polynomial(n));
    }
}

TEST_CASE("coefficients are symmetric") {
    for (int n = 1; n <= 10; ++n) {
        const auto a = increasing_edge_polynomial(n);
        REQUIRE(a.size() == static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) CHECK(a[k] == a[n - 1 - k]);
    }
}

TEST_CASE("leading coefficient is (n-1)! and total is n^(n-1)") {
    long long fact = 1;
    for (int n = 1; n <= 10; ++n) {
        if (n > 1) fact *= (n - 1);
        const auto a = increasing_edge_polynomial(n);
        CHECK(a.back() == fact);
        CHECK(a.front() == fact);
        const long long total = std::accumulate(a.begin(), a.end(), 0LL);
        CHECK(total == ipow(n, n - 1));
    }
}

TEST_CASE("out-of-range sizes are rejected") {
    CHECK_THROWS_AS(count_by_increasing_edges(0), DomainError);
    CHECK_THROWS_AS(count_by_increasing_edges(10), DomainError);
    CHECK_THROWS_AS(increasing_edge_polynomial(0), DomainError);
    CHECK_THROWS_AS(increasing_edge_polynomial(17), DomainError);
}
