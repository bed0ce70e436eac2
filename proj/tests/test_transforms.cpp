#include <catch2/catch_amalgamated.hpp>

#include "reglat/transforms.hpp"

using namespace reglat;

TEST_CASE("watson case selection", "[transforms]") {
    auto c = watson_case_for(DiagonalLattice({1, 1, 1, 4}), 2);
    REQUIRE(c.has_value());
    CHECK(c->tag == WatsonTag::P4_case_iii);
    CHECK(c->modulus == 4);

    auto c2 = watson_case_for(DiagonalLattice({1, 3, 9, 27}), 3);
    REQUIRE(c2.has_value());
    CHECK(c2->tag == WatsonTag::Podd_case_iv);

    CHECK_FALSE(watson_case_for(DiagonalLattice({1, 1, 1, 1}), 2).has_value());
    CHECK_THROWS_AS(watson_case_for(DiagonalLattice({1, 1, 1}), 2), RankTooSmall);
    CHECK_THROWS_AS(watson_case_for(DiagonalLattice({2, 4, 6, 8}), 3), NotPrimitive);
}

TEST_CASE("lambda transforms", "[transforms]") {
    auto c = watson_case_for(DiagonalLattice({1, 1, 1, 4}), 2);
    CHECK(lambda_transform(DiagonalLattice({1, 1, 1, 4}), *c) == DiagonalLattice({1, 1, 1, 1}));

    auto c4 = watson_case_for(DiagonalLattice({1, 3, 9, 27}), 3);
    CHECK(lambda_transform(DiagonalLattice({1, 3, 9, 27}), *c4) == DiagonalLattice({1, 3, 3, 9}));

    auto ci = watson_case_for(DiagonalLattice({1, 2, 4, 8}), 2);
    REQUIRE(ci.has_value());
    CHECK(ci->tag == WatsonTag::P2_case_i);
    CHECK(lambda_transform(DiagonalLattice({1, 2, 4, 8}), *ci) == DiagonalLattice({1, 2, 2, 4}));

    CHECK_THROWS_AS(lambda_transform(DiagonalLattice({1, 1, 1, 1}), *c), CaseMismatch);
}

TEST_CASE("redundancy modes", "[transforms]") {
    DiagonalLattice L({1, 48, 144, 144});
    CHECK(is_redundant(L, 288, 100000, RedundancyMode::Local));
    CHECK_FALSE(is_redundant(L, 48, 100000, RedundancyMode::Local));
    CHECK(is_redundant(L, 288, 100000, RedundancyMode::Empirical));
    CHECK_FALSE(is_redundant(L, 48, 100000, RedundancyMode::Empirical));

    CHECK(is_redundant(DiagonalLattice({1, 1, 1, 1}), 4, 10000, RedundancyMode::Empirical));
    CHECK_FALSE(is_redundant(DiagonalLattice({1}), 1, 100, RedundancyMode::Empirical));
}

TEST_CASE("redundant insertions into <1,48,144,288>", "[transforms]") {
    // the sibling of <1,48,144,144> reached by inserting 2^5 3^2 instead:
    // the same multiples are redundant, so both generate the same rank >= 5
    // family by redundant insertions
    DiagonalLattice K({1, 48, 144, 288});
    for (i64 n : {144, 288, 432, 1440})
        CHECK(is_redundant(K, n, 100000, RedundancyMode::Local));
    for (i64 n : {48, 96, 720, 1000})
        CHECK(is_redundant(K, n, 100000, RedundancyMode::Local) == (n % 144 == 0));
    CHECK(is_redundant(K, 288, 100000, RedundancyMode::Empirical));
    CHECK_FALSE(is_redundant(K, 96, 100000, RedundancyMode::Empirical));
}

TEST_CASE("local and empirical redundancy agree on regular lattices", "[transforms]") {
    for (const auto& coeffs : {std::vector<i64>{1, 1, 1, 4}, std::vector<i64>{2, 3, 6, 9},
                               std::vector<i64>{1, 2, 5, 25}}) {
        DiagonalLattice L(coeffs);
        for (i64 n = 1; n <= 500; ++n)
            CHECK(is_redundant(L, n, 100000, RedundancyMode::Local) ==
                  is_redundant(L, n, 100000, RedundancyMode::Empirical));
    }
}

TEST_CASE("minimality", "[transforms]") {
    CHECK(is_minimal(DiagonalLattice({1, 2, 3, 5}), 10000));
    CHECK_FALSE(is_minimal(DiagonalLattice({1, 1, 1, 1, 1}), 10000));
    CHECK(is_minimal(DiagonalLattice({1}), 100));
}

TEST_CASE("minimalize", "[transforms]") {
    CHECK(minimalize(DiagonalLattice({1, 1, 1, 1, 2}), 10000) == DiagonalLattice({1, 1, 1, 1}));
    CHECK(minimalize(DiagonalLattice({1, 2, 3, 5}), 10000) == DiagonalLattice({1, 2, 3, 5}));
    CHECK(minimalize(DiagonalLattice({1}), 100) == DiagonalLattice({1}));
    // idempotent
    auto m = minimalize(DiagonalLattice({1, 1, 1, 1, 2, 4}), 10000);
    CHECK(minimalize(m, 10000) == m);
    CHECK(is_minimal(m, 10000));
}
