#pragma once

#include <array>
#include <set>

#include "reglat/lattice.hpp"

namespace reglat {
namespace tables {

using Triple = std::array<i64, 3>;

/// The 103 ternary candidates (Table 1).  Daggered entries are the six
/// irregular ternaries; <3,3,7> carries the double dagger.
struct Table1Row {
    Triple t;
    bool irregular;       // single dagger
    bool seven_adic;      // double dagger
};

inline const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> rows = {
        {{1, 1, 1}, false, false},   {{1, 1, 2}, false, false},   {{1, 1, 3}, false, false},
        {{1, 1, 4}, false, false},   {{1, 1, 5}, false, false},   {{1, 1, 6}, false, false},
        {{1, 1, 8}, false, false},   {{1, 1, 9}, false, false},   {{1, 1, 12}, false, false},
        {{1, 1, 16}, false, false},  {{1, 1, 24}, false, false},  {{1, 2, 2}, false, false},
        {{1, 2, 3}, false, false},   {{1, 2, 4}, false, false},   {{1, 2, 5}, false, false},
        {{1, 2, 6}, false, false},   {{1, 2, 8}, false, false},   {{1, 2, 10}, false, false},
        {{1, 2, 16}, false, false},  {{1, 2, 32}, false, false},  {{1, 3, 3}, false, false},
        {{1, 3, 4}, false, false},   {{1, 3, 6}, false, false},   {{1, 3, 9}, false, false},
        {{1, 3, 10}, false, false},  {{1, 3, 12}, false, false},  {{1, 3, 18}, false, false},
        {{1, 3, 30}, false, false},  {{1, 3, 36}, false, false},  {{1, 4, 4}, false, false},
        {{1, 4, 6}, false, false},   {{1, 4, 8}, false, false},   {{1, 4, 12}, false, false},
        {{1, 4, 16}, false, false},  {{1, 4, 20}, true, false},   {{1, 4, 24}, false, false},
        {{1, 4, 36}, false, false},  {{1, 5, 5}, false, false},   {{1, 5, 8}, false, false},
        {{1, 5, 10}, false, false},  {{1, 5, 25}, false, false},  {{1, 5, 40}, false, false},
        {{1, 6, 6}, false, false},   {{1, 6, 9}, false, false},   {{1, 6, 16}, false, false},
        {{1, 6, 18}, false, false},  {{1, 6, 24}, false, false},  {{1, 8, 8}, false, false},
        {{1, 8, 16}, false, false},  {{1, 8, 24}, false, false},  {{1, 8, 32}, false, false},
        {{1, 8, 40}, false, false},  {{1, 8, 64}, false, false},  {{1, 9, 9}, false, false},
        {{1, 9, 12}, false, false},  {{1, 9, 24}, false, false},  {{1, 10, 30}, false, false},
        {{1, 12, 12}, false, false}, {{1, 12, 24}, true, false},  {{1, 12, 36}, false, false},
        {{1, 16, 16}, false, false}, {{1, 16, 24}, false, false}, {{1, 16, 32}, true, false},
        {{1, 16, 48}, false, false}, {{1, 16, 144}, true, false}, {{1, 24, 24}, false, false},
        {{1, 24, 72}, false, false}, {{1, 40, 120}, false, false},{{1, 48, 144}, false, false},
        {{2, 2, 3}, false, false},   {{2, 3, 3}, false, false},   {{2, 3, 6}, false, false},
        {{2, 3, 8}, false, false},   {{2, 3, 9}, false, false},   {{2, 3, 12}, false, false},
        {{2, 3, 18}, false, false},  {{2, 3, 48}, false, false},  {{2, 5, 6}, false, false},
        {{2, 5, 10}, false, false},  {{2, 5, 15}, false, false},  {{2, 6, 9}, false, false},
        {{2, 6, 15}, false, false},  {{3, 3, 4}, false, false},   {{3, 3, 7}, false, true},
        {{3, 3, 8}, false, false},   {{3, 4, 4}, false, false},   {{3, 4, 8}, true, false},
        {{3, 4, 12}, false, false},  {{3, 4, 36}, false, false},  {{3, 8, 8}, false, false},
        {{3, 8, 12}, false, false},  {{3, 8, 24}, false, false},  {{3, 8, 48}, false, false},
        {{3, 8, 72}, false, false},  {{3, 10, 30}, false, false}, {{3, 16, 48}, false, false},
        {{3, 40, 120}, false, false},{{5, 6, 9}, true, false},    {{5, 6, 15}, false, false},
        {{5, 8, 24}, false, false},  {{5, 8, 40}, false, false},  {{8, 9, 24}, false, false},
        {{8, 15, 24}, false, false},
    };
    return rows;
}

/// t(J) for the six irregular Table-1 ternaries (Table 2).
inline const std::vector<std::pair<Triple, i64>>& table2() {
    static const std::vector<std::pair<Triple, i64>> rows = {
        {{1, 4, 20}, 77},  {{1, 12, 24}, 69}, {{1, 16, 32}, 161},
        {{1, 16, 144}, 473}, {{3, 4, 8}, 23}, {{5, 6, 9}, 17},
    };
    return rows;
}

/// u(J) for the six regular ternaries with Q(J_7) != Z_7 (Table 3).
inline const std::vector<std::pair<Triple, i64>>& table3() {
    static const std::vector<std::pair<Triple, i64>> rows = {
        {{1, 1, 21}, 7}, {{1, 9, 21}, 7}, {{1, 21, 21}, 3},
        {{3, 3, 7}, 21}, {{3, 7, 7}, 1},  {{3, 7, 63}, 1},
    };
    return rows;
}

/// One a4 family of a Table-4 row: values c * p^(alpha r + beta), r = 1,2,...
struct Family {
    i64 c;
    i64 p;
    int alpha;
    int beta;
};

/// Regular diagonal quaternaries (Table 4): ternary section, parametric a4
/// families, and sporadic a4 values.
struct Table4Row {
    Triple t;
    std::vector<Family> families;
    std::vector<i64> constants;
};

inline const std::vector<Table4Row>& table4() {
    static const std::vector<Table4Row> rows = {
        {{1, 1, 1}, {{1, 2, 1, -1}, {3, 2, 2, -1}}, {3, 5, 7}},
        {{1, 1, 2}, {{1, 2, 1, 0}, {3, 2, 2, -2}}, {5, 6, 7, 9, 10, 11, 13, 14}},
        {{1, 1, 3}, {{1, 3, 1, 0}, {2, 3, 1, 0}, {4, 3, 2, -2}, {5, 3, 2, -2}}, {}},
        {{1, 1, 4}, {{1, 2, 1, 1}, {3, 2, 2, 1}}, {12, 20, 28}},
        {{1, 1, 5}, {{1, 2, 2, 1}}, {}},
        {{1, 1, 6}, {{1, 3, 1, 1}, {2, 3, 2, 0}}, {}},
        {{1, 1, 8}, {{1, 2, 1, 2}, {3, 2, 2, 2}}, {24, 40, 56}},
        {{1, 1, 12}, {{4, 3, 2, 0}}, {}},
        {{1, 1, 16}, {{1, 2, 1, 3}, {3, 2, 2, 3}}, {48, 80, 112}},
        {{1, 1, 24}, {{8, 3, 2, 0}}, {}},
        {{1, 2, 2}, {{1, 2, 1, 0}, {3, 2, 2, -1}}, {3, 5, 7}},
        {{1, 2, 3}, {{1, 2, 1, 1}}, {3, 5, 6, 7, 9, 10}},
        {{1, 2, 4}, {{1, 2, 1, 1}, {3, 2, 2, 0}}, {5, 6, 7, 9, 10, 11, 13, 14}},
        {{1, 2, 5},
         {{1, 5, 2, 0}, {2, 5, 1, 0}, {4, 5, 2, 0}, {8, 5, 2, -2},
          {3, 5, 2, 0}, {9, 5, 2, -2}, {7, 5, 2, -2}, {6, 5, 2, -2}},
         {}},
        {{1, 2, 6}, {{1, 2, 1, 2}}, {}},
        {{1, 2, 8}, {{1, 2, 1, 2}, {3, 2, 2, 1}}, {}},
        {{1, 2, 16}, {{1, 2, 1, 3}, {3, 2, 2, 2}}, {}},
        {{1, 2, 32}, {{1, 2, 1, 4}, {3, 2, 2, 3}}, {}},
        {{1, 3, 3}, {{1, 3, 1, 0}, {2, 3, 1, 0}, {4, 3, 2, -1}, {5, 3, 2, -1}}, {}},
        {{1, 3, 4}, {{4, 3, 1, -1}, {8, 3, 2, -2}}, {}},
        {{1, 3, 6}, {{3, 2, 1, 0}}, {9, 15, 18, 21, 27, 30}},
        {{1, 3, 9}, {{1, 3, 1, 1}, {2, 3, 1, 1}, {4, 3, 2, 0}, {5, 3, 2, 0}}, {}},
        {{1, 3, 12}, {{4, 3, 1, 0}, {8, 3, 2, -1}}, {}},
        {{1, 3, 36}, {{4, 3, 1, 1}, {8, 3, 2, 0}}, {}},
        {{1, 4, 4}, {{1, 2, 1, 1}, {3, 2, 2, 1}}, {12, 20, 28}},
        {{1, 4, 8}, {{1, 2, 1, 2}, {3, 2, 2, 0}}, {20, 24, 28, 36, 40, 44, 52, 56}},
        {{1, 4, 12}, {{4, 3, 1, 0}, {8, 3, 1, 0}, {16, 3, 2, -2}, {20, 3, 2, -2}}, {}},
        {{1, 4, 16}, {{1, 2, 1, 3}, {3, 2, 2, 3}}, {48, 80, 112}},
        {{1, 4, 20}, {}, {32}},
        {{1, 4, 24}, {{4, 3, 1, 1}, {8, 3, 2, 0}}, {}},
        {{1, 5, 5}, {{5, 2, 2, -1}}, {5, 15}},
        {{1, 5, 8}, {{8, 5, 1, -1}, {16, 5, 2, -2}, {32, 5, 2, -2}, {24, 5, 2, -2}}, {}},
        {{1, 5, 10},
         {{1, 5, 2, 1}, {2, 5, 1, 0}, {4, 5, 2, -1}, {8, 5, 2, -1},
          {3, 5, 2, -1}, {9, 5, 2, -1}, {7, 5, 2, -1}, {6, 5, 2, -1}},
         {}},
        {{1, 5, 40}, {{8, 5, 1, 0}, {16, 5, 2, -1}, {32, 5, 2, -1}, {24, 5, 2, -1}}, {}},
        {{1, 6, 9}, {{1, 3, 1, 1}, {2, 3, 2, 0}}, {}},
        {{1, 8, 8}, {{1, 2, 1, 2}, {3, 2, 2, 1}}, {}},
        {{1, 8, 16}, {{1, 2, 1, 3}, {3, 2, 2, 2}}, {24, 40, 56}},
        {{1, 8, 24}, {{1, 2, 1, 4}}, {}},
        {{1, 8, 32}, {{1, 2, 1, 4}, {3, 2, 2, 3}}, {}},
        {{1, 8, 64}, {{1, 2, 1, 5}, {3, 2, 2, 4}}, {}},
        {{1, 9, 12}, {{4, 3, 2, 0}}, {}},
        {{1, 9, 24}, {{8, 3, 2, 0}}, {}},
        {{1, 12, 12}, {{4, 3, 1, 0}, {8, 3, 2, -1}}, {}},
        {{1, 12, 24}, {}, {24, 36, 48, 60}},
        {{1, 12, 36}, {{4, 3, 1, 1}, {8, 3, 1, 1}, {16, 3, 2, 0}, {20, 3, 2, 0}}, {}},
        {{1, 16, 16}, {{1, 2, 1, 3}, {3, 2, 2, 3}}, {48, 80, 112}},
        {{1, 16, 32}, {}, {32, 48, 64, 80, 96, 112, 128, 144, 160}},
        {{1, 16, 48}, {{16, 3, 2, 0}, {32, 3, 2, 0}}, {}},
        {{1, 48, 144}, {{16, 3, 2, 0}, {32, 3, 2, 0}}, {}},
        {{2, 3, 3}, {{1, 3, 1, 0}, {2, 3, 2, -1}}, {}},
        {{2, 3, 6}, {{3, 2, 1, 0}}, {9, 15}},
        {{2, 3, 9}, {}, {9, 18}},
        {{3, 3, 4}, {{4, 3, 2, -1}}, {}},
        {{3, 3, 8}, {{8, 3, 2, -1}}, {}},
        {{3, 4, 4}, {{4, 3, 1, -1}, {8, 3, 2, -2}}, {}},
        {{3, 4, 8}, {}, {8, 12, 16, 20}},
        {{3, 4, 12}, {{4, 3, 1, 0}, {8, 3, 1, 0}, {16, 3, 2, -1}, {20, 3, 2, -1}}, {}},
        {{3, 4, 36}, {{4, 3, 1, 1}, {8, 3, 2, 0}}, {}},
        {{3, 8, 12}, {{4, 3, 1, 0}, {8, 3, 2, -1}}, {}},
        {{3, 8, 24}, {{3, 2, 1, 2}}, {}},
        {{3, 16, 48}, {{16, 3, 2, -1}, {32, 3, 2, -1}}, {}},
    };
    return rows;
}

/// Expand one family up to a4max (values below a4min are dropped).
inline std::vector<i64> expand_family(const Family& f, i64 a4min, i64 a4max) {
    std::vector<i64> out;
    for (int r = 1;; ++r) {
        int e = f.alpha * r + f.beta;
        i64 v = checked_mul(f.c, pow_i64(f.p, e));
        if (v > a4max) break;
        if (v >= a4min) out.push_back(v);
    }
    return out;
}

/// All Table-4 quaternaries with a4 <= a4max, as sorted coefficient vectors.
inline std::set<std::vector<i64>> table4_lattices(i64 a4max) {
    std::set<std::vector<i64>> out;
    for (const auto& row : table4()) {
        std::set<i64> a4s;
        for (const auto& f : row.families)
            for (i64 v : expand_family(f, row.t[2], a4max)) a4s.insert(v);
        for (i64 c : row.constants)
            if (c >= row.t[2] && c <= a4max) a4s.insert(c);
        for (i64 a4 : a4s) {
            std::vector<i64> L{row.t[0], row.t[1], row.t[2], a4};
            std::sort(L.begin(), L.end());
            out.insert(L);
        }
    }
    return out;
}

/// Batch partition of the 103 candidates (Table 5), 1-based indices into table1().
struct Batch {
    const char* name;
    std::vector<int> indices;
};

inline const std::vector<Batch>& table5() {
    static const std::vector<Batch> batches = {
        {"Batch 1",
         {1, 2, 3, 4, 5, 6, 7, 10, 12, 13, 14, 16, 17, 19, 20,
          21, 24, 30, 32, 34, 44, 48, 49, 50, 51, 53, 61, 71}},
        {"Batch 2",
         {9, 11, 22, 23, 26, 29, 33, 36, 38, 39, 42, 55, 56,
          58, 60, 64, 69, 72, 74, 83, 85, 86, 88, 89, 91, 92, 96}},
        {"Batch 3", {35, 59, 63, 87}},
        {"Batch 4", {15, 40}},
        {"Batch 2'",
         {8, 18, 25, 27, 28, 31, 37, 41, 43, 45, 46, 47, 52, 54, 57, 62, 66, 67, 68, 70,
          73, 75, 76, 77, 78, 79, 80, 81, 82, 90, 93, 94, 95, 97, 99, 100, 101, 102, 103}},
        {"Batch 3'", {65, 84, 98}},
    };
    return batches;
}

/// Minimal regular quinaries (Table 6): prefixes and the (a4, a5) families,
/// a4 = base^{e4(r)}, a5 = s * base^{e5(r)}, s in {5,11,12,13,14,15}.
struct Table6Row {
    Triple t;
    int e4_alpha, e4_beta;  // a4 = 5^(alpha r + beta)
    int e5_alpha, e5_beta;  // a5 = s * 5^(alpha r + beta)
};

inline const std::vector<Table6Row>& table6() {
    static const std::vector<Table6Row> rows = {
        {{1, 2, 5}, 2, -1, 2, -2},
        {{1, 5, 10}, 2, 0, 2, -1},
    };
    return rows;
}

inline const std::vector<i64>& table6_s_values() {
    static const std::vector<i64> s = {5, 11, 12, 13, 14, 15};
    return s;
}

}  // namespace tables
}  // namespace reglat
