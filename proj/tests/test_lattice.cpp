#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "reglat/lattice.hpp"

using namespace reglat;

TEST_CASE("construction sorts and validates", "[lattice]") {
    DiagonalLattice L({1, 48, 144, 144});
    CHECK(L.rank() == 4);
    CHECK(L.coeffs() == std::vector<i64>{1, 48, 144, 144});

    CHECK(DiagonalLattice({3, 1, 2}).coeffs() == std::vector<i64>{1, 2, 3});
    CHECK_THROWS_AS(DiagonalLattice({0, 1}), NonPositiveCoefficient);
    CHECK_THROWS_AS(DiagonalLattice(std::vector<i64>{}), EmptyLattice);
}

TEST_CASE("discriminant", "[lattice]") {
    CHECK(DiagonalLattice({1, 2, 3}).discriminant() == 6);
    CHECK(DiagonalLattice({1, 48, 144}).discriminant() == 6912);
    CHECK(DiagonalLattice({7}).discriminant() == 7);
    CHECK_THROWS_AS(DiagonalLattice({i64{1} << 40, i64{1} << 40}).discriminant(), OverflowError);
}

TEST_CASE("remove and insert", "[lattice]") {
    CHECK(DiagonalLattice({1, 2, 3, 5}).remove_index(3) == DiagonalLattice({1, 2, 3}));
    CHECK(DiagonalLattice({1, 1}).remove_index(0) == DiagonalLattice({1}));
    CHECK_THROWS_AS(DiagonalLattice({1}).remove_index(0), RankTooSmall);
    CHECK_THROWS_AS(DiagonalLattice({1, 2}).remove_index(2), IndexOutOfRange);

    CHECK(DiagonalLattice({1, 48, 144, 144}).insert(288) ==
          DiagonalLattice({1, 48, 144, 144, 288}));
    CHECK(DiagonalLattice({1}).insert(1) == DiagonalLattice({1, 1}));
    CHECK(DiagonalLattice({2, 3}).insert(1) == DiagonalLattice({1, 2, 3}));
    CHECK_THROWS_AS(DiagonalLattice({1}).insert(0), NonPositiveCoefficient);
}

TEST_CASE("bad primes", "[lattice]") {
    CHECK(DiagonalLattice({1, 2, 3}).bad_primes() == std::vector<i64>{2, 3});
    CHECK(DiagonalLattice({1, 1, 1}).bad_primes() == std::vector<i64>{2});
    CHECK(DiagonalLattice({1, 2, 5, 5, 11}).bad_primes() == std::vector<i64>{2, 5, 11});
}

TEST_CASE("primitivity is a query, not an invariant", "[lattice]") {
    CHECK(DiagonalLattice({1, 2, 3}).primitive());
    CHECK_FALSE(DiagonalLattice({2, 4, 8}).primitive());
}

TEST_CASE("parse round trip", "[lattice]") {
    CHECK(DiagonalLattice::parse("1,48,144,144").coeffs() ==
          std::vector<i64>{1, 48, 144, 144});
    CHECK(DiagonalLattice::parse("3,1,2").to_string() == "1,2,3");
    CHECK_THROWS_AS(DiagonalLattice::parse("1,x"), ParseError);
    CHECK_THROWS_AS(DiagonalLattice::parse("0,1"), NonPositiveCoefficient);
}

TEST_CASE("insert/remove and discriminant properties", "[lattice]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + static_cast<int>(rng() % 5);
        std::vector<i64> c;
        for (int i = 0; i < k; ++i) c.push_back(1 + static_cast<i64>(rng() % 50));
        DiagonalLattice L(c);
        i64 n = 1 + static_cast<i64>(rng() % 50);
        DiagonalLattice J = L.insert(n);
        CHECK(J.discriminant() == n * L.discriminant());
        // removing the inserted position returns an equal lattice
        int pos = static_cast<int>(std::lower_bound(J.coeffs().begin(), J.coeffs().end(), n) -
                                   J.coeffs().begin());
        CHECK(J.remove_index(pos) == L);
        auto bp = J.bad_primes();
        CHECK(bp.front() == 2);
    }
}
