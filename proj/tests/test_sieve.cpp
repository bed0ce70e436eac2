#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <random>

#include "reglat/sieve.hpp"

using namespace reglat;

TEST_CASE("sieve matches the quoted complement of <2,3,6>", "[sieve]") {
    RepSieve s(DiagonalLattice({2, 3, 6}), 50);
    std::set<i64> complement;
    for (i64 n = 1; n <= 50; ++n)
        if (!s.test(n)) complement.insert(n);
    std::set<i64> want;
    for (i64 sc = 1; sc <= 50; sc *= 4)
        for (i64 u = 0; sc * (8 * u + 7) <= 50; ++u) want.insert(sc * (8 * u + 7));
    for (i64 v = 0; 3 * v + 1 <= 50; ++v) want.insert(3 * v + 1);
    CHECK(complement == want);
}

TEST_CASE("sieve of <1> lists squares", "[sieve]") {
    RepSieve s(DiagonalLattice({1}), 10);
    for (i64 n = 0; n <= 10; ++n) CHECK(s.test(n) == (n == 0 || n == 1 || n == 4 || n == 9));
}

TEST_CASE("sieve agrees with naive search", "[sieve]") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        std::vector<i64> c;
        for (int i = 0; i < k; ++i) c.push_back(1 + static_cast<i64>(rng() % 25));
        DiagonalLattice L(c);
        RepSieve s(L, 500);
        for (i64 n = 0; n <= 500; ++n) CHECK(s.test(n) == represents(L, n));
    }
}

TEST_CASE("represents examples", "[sieve]") {
    CHECK_FALSE(represents(DiagonalLattice({1, 1, 1}), 7));
    CHECK_FALSE(represents(DiagonalLattice({2, 3, 9, 36}), 26));
    CHECK(represents(DiagonalLattice({1, 2, 3, 5}), 4));
}

TEST_CASE("bound guard", "[sieve]") {
    CHECK_THROWS_AS(RepSieve(DiagonalLattice({1}), kMaxSieveBound + 1), BoundTooLarge);
}

TEST_CASE("file cache round trip", "[sieve]") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "reglat-sieve-test";
    fs::remove_all(dir);
    SieveCache::instance().set_directory(dir.string());
    DiagonalLattice L({1, 2, 5});
    auto a = SieveCache::instance().get(L, 2000);
    SieveCache::instance().clear_memory();
    auto b = SieveCache::instance().get(L, 2000);  // now served from disk
    CHECK(a->bits() == b->bits());
    // header is the documented format
    std::ifstream in(dir / "1_2_5.2000.sieve", std::ios::binary);
    REQUIRE(in.good());
    std::string l1, l2, l3;
    std::getline(in, l1);
    std::getline(in, l2);
    std::getline(in, l3);
    CHECK(l1 == "REGLAT-SIEVE v1");
    CHECK(l2 == "1,2,5");
    CHECK(l3 == "2000");
    SieveCache::instance().set_directory("");
    fs::remove_all(dir);
}

TEST_CASE("bitmap shifted-subset matches insertion", "[sieve]") {
    DiagonalLattice L({1, 1, 1, 1});
    auto base = rep_sieve(L, 2000);
    // sums of four squares are universal: inserting anything is redundant
    for (i64 n : {1, 2, 3, 7}) {
        bool subset = true;
        for (i64 x = 1; n * x * x <= 2000; ++x)
            subset = subset && base->bits().shifted_subset(base->bits(), n * x * x);
        CHECK(subset);
    }
    DiagonalLattice one({1});
    auto s1 = rep_sieve(one, 100);
    CHECK_FALSE(s1->bits().shifted_subset(s1->bits(), 1));  // 1+1=2 is new
}
