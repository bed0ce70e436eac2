#pragma once

#include <functional>
#include <optional>

#include "reglat/padic.hpp"
#include "reglat/sieve.hpp"

namespace reglat {

inline void require_genus_preconditions(const DiagonalLattice& L) {
    if (L.rank() < 3) throw RankTooSmall("genus predicate needs rank >= 3");
    if (!L.primitive()) throw NotPrimitive();
}

/// n locally represented by L at every prime: primes outside bad_primes are
/// skipped (odd-p unimodular of rank >= 3 represents all of Z_p).
inline bool genus_represents(const DiagonalLattice& L, i64 n) {
    require_genus_preconditions(L);
    if (n < 1) throw Error("genus_represents expects n >= 1");
    for (i64 p : L.bad_primes())
        if (!local_rep_set_cached(L, p).member_n(n)) return false;
    return true;
}

/// Bitmap of Q(gen(L)) over [0, B], assembled from the per-prime class tables.
inline Bitmap genus_bitmap(const DiagonalLattice& L, i64 B) {
    require_genus_preconditions(L);
    Bitmap out(B);
    for (i64 n = 0; n <= B; ++n) out.set(n);
    for (i64 p : L.bad_primes()) {
        const LocalRepSet& ls = local_rep_set_cached(L, p);
        Bitmap allowed(B);
        allowed.set(0);
        for (i64 n = 1; n <= B; ++n)
            if (ls.member_n(n)) allowed.set(n);
        for (size_t w = 0; w < out.words().size(); ++w) out.words()[w] &= allowed.words()[w];
    }
    return out;
}

struct RegularityWitness {
    i64 n = 0;
    std::vector<LocalCertificate> certificates;  // one per bad prime

    bool verify(const DiagonalLattice& L) const {
        auto bad = L.bad_primes();
        if (certificates.size() != bad.size()) return false;
        for (size_t i = 0; i < bad.size(); ++i) {
            const auto& c = certificates[i];
            if (c.p != bad[i] || !c.verify()) return false;
            if (c.chain.front().coeffs != L.coeffs() || c.chain.front().target != n) return false;
        }
        return !represents(L, n);
    }
};

/// Bounded regularity evidence: RefutedAt(n) is an exact disproof with
/// re-checkable local certificates; ConfirmedUpTo(B) is evidence only.
struct RegularityVerdict {
    enum class Kind { ConfirmedUpTo, RefutedAt };
    Kind kind = Kind::ConfirmedUpTo;
    i64 value = 0;  // bound for confirmations, witness n for refutations
    RegularityWitness witness;

    bool confirmed() const { return kind == Kind::ConfirmedUpTo; }
    bool refuted() const { return kind == Kind::RefutedAt; }
};

inline RegularityVerdict regular_verdict(const DiagonalLattice& L, i64 B) {
    require_genus_preconditions(L);
    std::vector<const LocalRepSet*> sets;
    for (i64 p : L.bad_primes()) sets.push_back(&local_rep_set_cached(L, p));
    auto sieve = rep_sieve(L, B);
    for (i64 n = 1; n <= B; ++n) {
        if (sieve->test(n)) continue;
        bool local = true;
        for (const auto* s : sets)
            if (!s->member_n(n)) {
                local = false;
                break;
            }
        if (!local) continue;
        RegularityVerdict v;
        v.kind = RegularityVerdict::Kind::RefutedAt;
        v.value = n;
        v.witness.n = n;
        for (i64 p : L.bad_primes()) {
            LocalCertificate cert;
            locally_represents(L, p, n, &cert);
            v.witness.certificates.push_back(std::move(cert));
        }
        return v;
    }
    RegularityVerdict v;
    v.kind = RegularityVerdict::Kind::ConfirmedUpTo;
    v.value = B;
    return v;
}

/// psi(S, K) bounded by B: least n <= B with pred(n) true and n not
/// represented by K; nullopt when none (the ExceedsBound outcome).
inline std::optional<i64> psi(const std::function<bool(i64)>& member, const DiagonalLattice& K,
                              i64 B) {
    auto sieve = rep_sieve(K, B);
    for (i64 n = 1; n <= B; ++n)
        if (member(n) && !sieve->test(n)) return n;
    return std::nullopt;
}

/// t(J) = psi(Q(gen(J)), J): least locally-but-not-globally represented n.
inline std::optional<i64> t_value(const DiagonalLattice& J, i64 B) {
    if (J.rank() != 3) throw RankTooSmall("t(J) is defined for ternary lattices");
    auto v = regular_verdict(J, B);
    if (v.refuted()) return v.value;
    return std::nullopt;
}

/// u(J): least n not represented by J_7 but represented by J_q for all q != 7.
inline std::optional<i64> u_value(const DiagonalLattice& J, i64 B) {
    if (J.rank() != 3) throw RankTooSmall("u(J) is defined for ternary lattices");
    if (!J.primitive()) throw NotPrimitive();
    auto bad = J.bad_primes();
    if (std::find(bad.begin(), bad.end(), 7) == bad.end())
        throw Error("u(J) needs 7 among the bad primes");
    const LocalRepSet& at7 = local_rep_set_cached(J, 7);
    std::vector<const LocalRepSet*> others;
    for (i64 q : bad)
        if (q != 7) others.push_back(&local_rep_set_cached(J, q));
    for (i64 n = 1; n <= B; ++n) {
        if (at7.member_n(n)) continue;
        bool ok = true;
        for (const auto* s : others)
            if (!s->member_n(n)) {
                ok = false;
                break;
            }
        if (ok) return n;
    }
    return std::nullopt;
}

/// Poset order on coefficient vectors: a subsequence with equal bounded Q-set.
inline bool precedes(const DiagonalLattice& a, const DiagonalLattice& b, i64 B) {
    size_t i = 0;
    for (i64 c : b.coeffs())
        if (i < a.coeffs().size() && a.coeffs()[i] == c) ++i;
    if (i != a.coeffs().size()) return false;
    return rep_sieve(a, B)->bits() == rep_sieve(b, B)->bits();
}

/// All integer tuples (c_1,...,c_k) with sum a_i c_i^2 = n, in lexicographic
/// order (signs included).
inline std::vector<std::vector<i64>> vectors_with_norm(const DiagonalLattice& L, i64 n) {
    std::vector<std::vector<i64>> out;
    std::vector<i64> acc(static_cast<size_t>(L.rank()), 0);
    const auto& a = L.coeffs();
    std::function<void(size_t, i64)> rec = [&](size_t i, i64 rem) {
        if (i == a.size()) {
            if (rem == 0) out.push_back(acc);
            return;
        }
        i64 lim = isqrt(rem / a[i]);
        while (lim * lim * a[i] > rem) --lim;
        for (i64 c = -lim; c <= lim; ++c) {
            acc[i] = c;
            rec(i + 1, rem - a[i] * c * c);
        }
        acc[i] = 0;
    };
    if (n >= 0) rec(0, n);
    return out;
}

}  // namespace reglat
