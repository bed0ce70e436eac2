#pragma once

#include <optional>

#include "reglat/globalrep.hpp"

namespace reglat {

struct CaseMismatch : Error {
    CaseMismatch() : Error("Watson case does not apply to this lattice") {}
};

/// The five diagonal-preserving cases of the Watson transformation.
enum class WatsonTag { P2_case_i, P4_case_ii, P4_case_iii, Podd_case_iv, Podd_case_v };

struct WatsonCase {
    WatsonTag tag;
    i64 p;
    i64 modulus;  // 2, 4, or p

    const char* name() const {
        switch (tag) {
            case WatsonTag::P2_case_i: return "i";
            case WatsonTag::P4_case_ii: return "ii";
            case WatsonTag::P4_case_iii: return "iii";
            case WatsonTag::Podd_case_iv: return "iv";
            case WatsonTag::Podd_case_v: return "v";
        }
        return "?";
    }
};

/// First applicable case of the lambda transformation at p, reading the
/// lattice as <a_1, p^{e_2} a_2, ...> with exponents ascending.
inline std::optional<WatsonCase> watson_case_for(const DiagonalLattice& L, i64 p) {
    if (L.rank() < 4) throw RankTooSmall("Watson cases are stated for rank >= 4");
    if (!L.primitive()) throw NotPrimitive();
    std::vector<int> es;
    std::vector<i64> units;  // coefficients coprime to p
    for (i64 a : L.coeffs()) {
        es.push_back(ord_p(p, a));
        if (a % p != 0) units.push_back(a);
    }
    std::sort(es.begin(), es.end());
    if (p == 2) {
        if (es[1] >= 1) return WatsonCase{WatsonTag::P2_case_i, 2, 2};
        if (es[1] == 0 && es[2] >= 2 && (units[0] - units[1]) % 4 == 0)
            return WatsonCase{WatsonTag::P4_case_ii, 2, 4};
        if (es[1] == 0 && es[2] == 0 && es[3] >= 2 && (units[0] - units[1]) % 4 == 0 &&
            (units[0] - units[2]) % 4 == 0)
            return WatsonCase{WatsonTag::P4_case_iii, 2, 4};
        return std::nullopt;
    }
    if (es[1] >= 1) return WatsonCase{WatsonTag::Podd_case_iv, p, p};
    if (es[1] == 0 && es[2] >= 1 &&
        legendre(-(units[0] % p) * (units[1] % p) % p, p) == -1)
        return WatsonCase{WatsonTag::Podd_case_v, p, p};
    return std::nullopt;
}

/// Coefficient-wise Lambda followed by the primitive rescale: coefficients
/// coprime to p pick up a factor p^2 (4 for the p=2 cases), then the whole
/// form is divided by the largest power of p keeping integrality.
inline DiagonalLattice lambda_transform(const DiagonalLattice& L, const WatsonCase& c) {
    auto applicable = watson_case_for(L, c.p);
    if (!applicable || applicable->tag != c.tag) throw CaseMismatch();
    i64 p = c.p;
    i64 p2 = checked_mul(p, p);
    std::vector<i64> big;
    for (i64 a : L.coeffs())
        big.push_back(a % p == 0 ? a : checked_mul(a, p2));
    int t = 64;
    for (i64 a : big) t = std::min(t, ord_p(p, a));
    i64 d = pow_i64(p, t);
    for (i64& a : big) a /= d;
    return DiagonalLattice(std::move(big));
}

enum class RedundancyMode { Local, Empirical };

/// Is inserting n into L redundant (Q unchanged)?  Local mode applies the
/// per-prime redundancy criteria over the bad primes of the inserted lattice;
/// Empirical compares bounded sieves and is the test-suite ground truth.
inline bool is_redundant(const DiagonalLattice& L, i64 n, i64 B, RedundancyMode mode) {
    if (n < 1) throw NonPositiveCoefficient();
    if (mode == RedundancyMode::Local) {
        for (i64 p : L.insert(n).bad_primes())
            if (!locally_redundant(L, p, n)) return false;
        return true;
    }
    auto base = rep_sieve(L, B);
    for (i64 x = 1; n <= B / (x * x); ++x)
        if (!base->bits().shifted_subset(base->bits(), n * x * x)) return false;
    return true;
}

/// Minimal: removing any single coefficient shrinks the bounded Q-set.
inline bool is_minimal(const DiagonalLattice& L, i64 B) {
    if (L.rank() == 1) return true;
    auto full = rep_sieve(L, B);
    for (int i = 0; i < L.rank(); ++i)
        if (rep_sieve(L.remove_index(i), B)->bits() == full->bits()) return false;
    return true;
}

/// Greedy removal (largest index first) of coefficients that leave the
/// bounded Q-set unchanged; the fixed point is is_minimal.
inline DiagonalLattice minimalize(const DiagonalLattice& L, i64 B) {
    DiagonalLattice cur = L;
    bool changed = true;
    while (changed && cur.rank() > 1) {
        changed = false;
        auto full = rep_sieve(cur, B);
        for (int i = cur.rank() - 1; i >= 0; --i) {
            DiagonalLattice sub = cur.remove_index(i);
            if (rep_sieve(sub, B)->bits() == full->bits()) {
                cur = sub;
                changed = true;
                break;
            }
        }
    }
    return cur;
}

}  // namespace reglat
