#include <catch2/catch_amalgamated.hpp>

#include "reglat/classify.hpp"

using namespace reglat;

TEST_CASE("s-values", "[classify]") {
    CHECK(s_values({1, 1, 1}, 2) == std::vector<i64>{1, 49});
    CHECK(s_values({1, 1, 1}, 6) == std::vector<i64>{1, 49, 121, 169, 241, 289});
    for (const auto& d : all_delta_triples())
        for (i64 s : s_values(d, 4)) CHECK(s % 8 == d.d2);
}

TEST_CASE("U2", "[classify]") {
    auto u2 = build_U2({1, 1, 1});
    // U1 = {1} since s1 = 1; psi(S, <1>) = 241
    i64 maxb2 = 0;
    for (auto [b1, b2] : u2) {
        CHECK(b1 == 1);
        CHECK(b1 <= b2);
        maxb2 = std::max(maxb2, b2);
    }
    CHECK(maxb2 == 241);
    CHECK(u2.size() == 241);
}

TEST_CASE("T guard", "[classify]") {
    // delta = (1,1,1), pair (1,1): guard fails at every q, so T tests <1,1>
    CHECK_FALSE(T_membership({1, 1, 1}, 1, 1, 2, 3));  // 3 not a 2-adic sum of two squares
    CHECK(T_membership({1, 1, 1}, 1, 1, 2, 2));
    // delta_2 = 3 differs from both classes: the augmented <1,1,3> takes 3
    CHECK(T_membership({3, 1, 1}, 1, 1, 2, 3));
    // S(delta) members land in T when the classes are represented
    DeltaTriple d{1, 1, 1};
    for (i64 n : s_values(d, 4))
        for (i64 q : {2, 3, 5}) CHECK(T_membership(d, 1, 1, q, n));
}

TEST_CASE("quaternary scan over <1,1,1>", "[classify]") {
    auto recs = classify_quaternaries({1, 1, 1}, 10, 100000);
    std::set<i64> confirmed, refuted;
    for (const auto& r : recs) {
        i64 a4 = r.lattice.coeffs().back();
        (r.verdict.confirmed() ? confirmed : refuted).insert(a4);
    }
    CHECK(confirmed == std::set<i64>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(refuted == std::set<i64>{9, 10});
    for (const auto& r : recs)
        if (r.verdict.confirmed()) CHECK(!r.note.empty());
}

TEST_CASE("no quaternary extension of <1,16,144> survives", "[classify]") {
    for (const auto& rec : classify_quaternaries({1, 16, 144}, 473, 100000))
        CHECK(rec.verdict.refuted());
}

TEST_CASE("quinary scan over <1,1,1,2>", "[classify]") {
    auto recs = search_rank5(DiagonalLattice({1, 1, 1, 2}), 10, 10000);
    for (const auto& r : recs)
        CHECK_FALSE((r.verdict.confirmed() && r.minimal));
}

TEST_CASE("a-sets", "[classify]") {
    auto s11 = a_sets(11);
    CHECK(s11.minus_prime == std::vector<i64>{7});
    std::vector<i64> small_minus, empty_plus;
    for (i64 p : primes_upto(83)) {
        if (p < 3) continue;
        auto s = a_sets(p);
        if (s.minus_prime.size() <= 1) small_minus.push_back(p);
        if (s.plus_prime.empty()) empty_plus.push_back(p);
    }
    CHECK(small_minus == std::vector<i64>{3, 5, 11});
    CHECK(empty_plus == std::vector<i64>{3, 5, 7});
}

TEST_CASE("forced-basis check", "[classify]") {
    CHECK(forced_new_check(DiagonalLattice({1, 2, 5, 5, 11}), {1, 2, 5, 10, 15}));
    CHECK_FALSE(forced_new_check(DiagonalLattice({1, 1}), {1}));
    CHECK(forced_new_check(DiagonalLattice({1}), {1}));
    CHECK_THROWS_AS(forced_new_check(DiagonalLattice({2}), {3}), ProbeNotRepresented);
}

TEST_CASE("batch partition covers the 103 indices", "[classify]") {
    std::vector<size_t> sizes;
    std::set<int> all;
    for (const auto& b : tables::table5()) {
        sizes.push_back(b.indices.size());
        all.insert(b.indices.begin(), b.indices.end());
    }
    CHECK(sizes == std::vector<size_t>{28, 27, 4, 2, 39, 3});
    CHECK(all.size() == 103);
    CHECK(*all.begin() == 1);
    CHECK(*all.rbegin() == 103);
    CHECK(tables::table1().size() == 103);
}

TEST_CASE("table-4 family expansion", "[classify]") {
    // row <1,1,1>: 2^{r-1}, 3*2^{2r-1}, constants 3,5,7
    auto set = tables::table4_lattices(10);
    CHECK(set.count({1, 1, 1, 1}) == 1);
    CHECK(set.count({1, 1, 1, 6}) == 1);
    CHECK(set.count({1, 1, 1, 7}) == 1);
    CHECK(set.count({1, 1, 1, 9}) == 0);
}
