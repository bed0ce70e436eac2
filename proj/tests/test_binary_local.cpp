#include <catch2/catch_amalgamated.hpp>

#include "reglat/binary_local.hpp"

using namespace reglat;

TEST_CASE("binary representation at p = 2", "[binary-local]") {
    CHECK(represents_binary_locally(DiagonalLattice({1, 1, 1, 1}), 2, 1, 3));
    CHECK_FALSE(represents_binary_locally(DiagonalLattice({1, 1, 1, 1}), 2, 1, 7));
    // orthogonality forces the second vector into <1,1>_2, which misses 3
    CHECK_FALSE(represents_binary_locally(DiagonalLattice({1, 1, 1}), 2, 1, 3));
    CHECK(represents_binary_locally(DiagonalLattice({1, 7}), 2, 1, 7));
    CHECK_FALSE(represents_binary_locally(DiagonalLattice({1, 1}), 2, 1, 3));
    // congruence-search oracle value, frozen
    CHECK(represents_binary_locally(DiagonalLattice({1, 2, 5, 5, 11}), 2, 1, 7));
    CHECK(represents_binary_locally(DiagonalLattice({1, 2, 5, 5, 11}), 2, 1, 3));
}

TEST_CASE("binary representation at odd p", "[binary-local]") {
    for (i64 p : {3, 5, 7, 11, 13, 47})
        CHECK(represents_binary_locally(DiagonalLattice({1, 1, 1, 1}), p, 1, -1));
    // rank-2 unit block: decided by the discriminant class of the complement
    CHECK_FALSE(represents_binary_locally(DiagonalLattice({1, 1, 3, 9}), 3, 1, -1));
    CHECK(represents_binary_locally(DiagonalLattice({1, 2, 3, 9}), 3, 1, -1));
    CHECK_THROWS_AS(represents_binary_locally(DiagonalLattice({1, 1}), 3, 1, 0), ZeroInput);
}

TEST_CASE("binary representation with p dividing a target", "[binary-local]") {
    // tree search (no F_p shortcut applies when p | b1 b2)
    CHECK(represents_binary_locally(DiagonalLattice({1, 1, 1, 1}), 3, 3, 3));
    // <1,1> at 3 cannot even represent 3 (odd valuation, anisotropic)
    CHECK_FALSE(represents_binary_locally(DiagonalLattice({1, 1}), 3, 3, 3));
    CHECK(represents_binary_locally(DiagonalLattice({1, 3}), 3, 1, 3));
}

TEST_CASE("p-stability", "[binary-local]") {
    CHECK(is_p_stable(DiagonalLattice({1, 1, 1, 1}), 2));
    CHECK(is_p_stable(DiagonalLattice({1, 1, 1, 1}), 7));
    // regular lattices are p-stable at every prime above 5
    CHECK(is_p_stable(DiagonalLattice({1, 2, 5, 5, 11}), 11));
    CHECK_FALSE(is_p_stable(DiagonalLattice({1, 4, 16, 64}), 2));
    CHECK_THROWS_AS(is_p_stable(DiagonalLattice({1, 1, 1}), 2), RankTooSmall);
}

TEST_CASE("regular lattices are stable above 5", "[binary-local]") {
    // the transformation-ladder guarantee, spot-checked on listed regular
    // quaternaries at primes dividing their discriminants
    CHECK(is_p_stable(DiagonalLattice({1, 2, 5, 7}), 7));
    CHECK(is_p_stable(DiagonalLattice({1, 2, 5, 25}), 7));
    CHECK(is_p_stable(DiagonalLattice({3, 8, 12, 12}), 7));
    CHECK(is_p_stable(DiagonalLattice({1, 5, 10, 40}), 11));
    CHECK(is_p_stable(DiagonalLattice({1, 48, 144, 144}), 7));
    // ...while small primes can be unstable (the lambda ladder's raw material)
    CHECK_FALSE(is_p_stable(DiagonalLattice({1, 48, 144, 144}), 2));
    CHECK_FALSE(is_p_stable(DiagonalLattice({1, 48, 144, 144}), 3));
    CHECK_FALSE(is_p_stable(DiagonalLattice({1, 2, 5, 25}), 5));
}

TEST_CASE("anisotropic quaternary matches by Jordan invariants", "[binary-local]") {
    // <1, -D, p, -pD> at p = 3: D = 2, so <1,1,3,3> has unit and p-blocks of
    // discriminant class equal to -Delta = -2 = 1 mod 3
    CHECK(is_p_stable(DiagonalLattice({1, 1, 3, 3}), 3));
    // <1,2,3,6>: unit disc 2 (nonresidue) != class(-2) = 1 -> no match, and
    // <1,-1> does embed since x^2+2y^2 = -1 mod 3 has the unit solution (0,1)
    CHECK(is_p_stable(DiagonalLattice({1, 2, 3, 6}), 3) ==
          represents_binary_locally(DiagonalLattice({1, 2, 3, 6}), 3, 1, -1));
}
