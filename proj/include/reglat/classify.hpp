#pragma once

#include <map>

#include "reglat/tables.hpp"
#include "reglat/transforms.hpp"

namespace reglat {

struct PsiUnbounded : Error {
    using Error::Error;
};
struct ProbeNotRepresented : Error {
    ProbeNotRepresented() : Error("probe value is not represented by the lattice") {}
};

inline constexpr i64 kPsiSafeguard = 1'000'000;

/// delta = (d2, d3, d5) in A = {1,3,5,7} x {1,2} x {1,2}.
struct DeltaTriple {
    i64 d2, d3, d5;

    i64 at(i64 q) const { return q == 2 ? d2 : q == 3 ? d3 : d5; }
    bool operator<(const DeltaTriple& o) const {
        return std::tie(d2, d3, d5) < std::tie(o.d2, o.d3, o.d5);
    }
    bool operator==(const DeltaTriple& o) const = default;
};

inline const std::vector<DeltaTriple>& all_delta_triples() {
    static const std::vector<DeltaTriple> a = [] {
        std::vector<DeltaTriple> v;
        for (i64 d2 : {1, 3, 5, 7})
            for (i64 d3 : {1, 2})
                for (i64 d5 : {1, 2}) v.push_back({d2, d3, d5});
        return v;
    }();
    return a;
}

/// S(d2,d3,d5): n = d2 (mod 8), n = d3 (mod 3), n = +-d5 (mod 5).
inline bool in_S(const DeltaTriple& d, i64 n) {
    return n % 8 == d.d2 && n % 3 == d.d3 && (n % 5 == d.d5 || n % 5 == (5 - d.d5) % 5);
}

inline std::vector<i64> s_values(const DeltaTriple& d, int count) {
    std::vector<i64> out;
    for (i64 n = 1; static_cast<int>(out.size()) < count; ++n)
        if (in_S(d, n)) out.push_back(n);
    return out;
}

namespace detail {

/// Guard of the T-sets: the delta_q class differs from every listed
/// coefficient's class (q | b counts as differing).
inline bool t_guard(i64 q, i64 dq, const std::vector<i64>& bs) {
    for (i64 b : bs) {
        if (q == 2) {
            if (b % 2 == 0 || b % 8 != dq) continue;
        } else {
            if (b % q == 0 || legendre(dq, q) != legendre(b, q)) continue;
        }
        return false;
    }
    return true;
}

/// n in T(delta, bs) at one prime q in {2,3,5}.
inline bool in_T_at(const DeltaTriple& d, const std::vector<i64>& bs, i64 q, i64 n) {
    std::vector<i64> form = bs;
    if (t_guard(q, d.at(q), bs)) form.push_back(d.at(q));
    return local_rep_set_cached(DiagonalLattice(form), q).member_n(n);
}

inline bool in_T(const DeltaTriple& d, const std::vector<i64>& bs, i64 n) {
    for (i64 q : {2, 3, 5})
        if (!in_T_at(d, bs, q, n)) return false;
    return true;
}

inline bool rep_binary_direct(i64 b1, i64 b2, i64 n) {
    for (i64 x = 0; b1 * x * x <= n; ++x) {
        i64 m = n - b1 * x * x;
        if (m % b2 == 0 && is_square(m / b2)) return true;
    }
    return false;
}

inline bool rep_ternary_direct(i64 b1, i64 b2, i64 b3, i64 n) {
    for (i64 z = 0; b3 * z * z <= n; ++z)
        if (rep_binary_direct(b1, b2, n - b3 * z * z)) return true;
    return false;
}

/// Least member of S(delta) not of the form b1 x^2.
inline i64 psi_S(const DeltaTriple& d, i64 b1) {
    for (i64 n = 1; n <= kPsiSafeguard; ++n) {
        if (!in_S(d, n)) continue;
        if (n % b1 == 0 && is_square(n / b1)) continue;
        return n;
    }
    throw PsiUnbounded("psi(S, <b1>) exceeded the safeguard bound");
}

/// Least member of T(delta, b1, b2) not represented by <b1, b2>.
inline i64 psi_T2(const DeltaTriple& d, i64 b1, i64 b2) {
    std::vector<i64> bs{b1, b2};
    for (i64 n = 1; n <= kPsiSafeguard; ++n) {
        if (!in_T(d, bs, n)) continue;
        if (rep_binary_direct(b1, b2, n)) continue;
        return n;
    }
    throw PsiUnbounded("psi(T, <b1,b2>) exceeded the safeguard bound");
}

/// Rank-3 viability: a regular extension of rank >= 4 exists only if no
/// n < b3 is T-locally representable yet missed by the ternary itself
/// (such an n would force a_4 <= n < b3 <= a_4).
inline bool section_viable(const DeltaTriple& d, i64 b1, i64 b2, i64 b3) {
    std::vector<i64> bs{b1, b2, b3};
    for (i64 n = 1; n < b3; ++n) {
        if (!in_T(d, bs, n)) continue;
        if (!rep_ternary_direct(b1, b2, b3, n)) return false;
    }
    return true;
}

}  // namespace detail

/// Single-prime T membership test (pair stage).
inline bool T_membership(const DeltaTriple& d, i64 b1, i64 b2, i64 q, i64 n) {
    if (q != 2 && q != 3 && q != 5) throw Error("T is defined for q in {2,3,5}");
    return detail::in_T_at(d, {b1, b2}, q, n);
}

/// U2(delta): pairs b1 <= b2 with b1 <= s1(delta), b2 <= psi(S(delta), <b1>).
inline std::vector<std::pair<i64, i64>> build_U2(const DeltaTriple& d) {
    std::vector<std::pair<i64, i64>> out;
    i64 s1 = s_values(d, 1)[0];
    for (i64 b1 = 1; b1 <= s1; ++b1) {
        i64 hi = detail::psi_S(d, b1);
        for (i64 b2 = b1; b2 <= hi; ++b2) out.emplace_back(b1, b2);
    }
    return out;
}

struct TernaryCandidate {
    tables::Triple t;
    std::vector<DeltaTriple> sources;
};

/// The 103 ternary-section candidates.  A triple is admitted under delta when
/// b1 <= s1, b2 <= psi(S, <b1>), b2 <= b3 <= psi(T(delta,b1,b2), <b1,b2>) and
/// the rank-3 viability cut holds; the result is the union over the 16
/// deltas, deduplicated and sorted.
inline std::vector<TernaryCandidate> build_table1() {
    std::map<tables::Triple, std::vector<DeltaTriple>> found;
    for (const DeltaTriple& d : all_delta_triples()) {
        i64 s1 = s_values(d, 1)[0];
        for (i64 b1 = 1; b1 <= s1; ++b1) {
            i64 hi2 = detail::psi_S(d, b1);
            for (i64 b2 = b1; b2 <= hi2; ++b2) {
                i64 hi3 = detail::psi_T2(d, b1, b2);
                for (i64 b3 = b2; b3 <= hi3; ++b3) {
                    if (!detail::section_viable(d, b1, b2, b3)) continue;
                    found[{b1, b2, b3}].push_back(d);
                }
            }
        }
    }
    std::vector<TernaryCandidate> out;
    for (auto& [t, sources] : found) out.push_back({t, std::move(sources)});
    return out;
}

struct ClassificationRecord {
    DiagonalLattice lattice;
    RegularityVerdict verdict;
    bool minimal = false;
    std::string note;  // matched Table-4/6 family, if any
};

namespace detail {

inline std::string family_label(const tables::Family& f) {
    std::ostringstream os;
    if (f.c != 1) os << f.c << "*";
    os << f.p << "^(" << f.alpha << "r" << std::showpos << f.beta << std::noshowpos << ")";
    return os.str();
}

inline std::string table4_note(const tables::Triple& t, i64 a4) {
    for (const auto& row : tables::table4()) {
        if (row.t != t) continue;
        for (const auto& f : row.families)
            for (i64 v : tables::expand_family(f, 1, a4))
                if (v == a4) return "table4 " + family_label(f);
        for (i64 c : row.constants)
            if (c == a4) return "table4 sporadic";
    }
    return "";
}

}  // namespace detail

/// Scan a4 in [b3, a4max] over primitive quaternaries on a Table-1 ternary.
inline std::vector<ClassificationRecord> classify_quaternaries(const tables::Triple& t, i64 a4max,
                                                               i64 B) {
    std::vector<ClassificationRecord> out;
    for (i64 a4 = t[2]; a4 <= a4max; ++a4) {
        DiagonalLattice L({t[0], t[1], t[2], a4});
        if (!L.primitive()) continue;
        ClassificationRecord rec{L, regular_verdict(L, B), false, detail::table4_note(t, a4)};
        if (rec.verdict.confirmed()) rec.minimal = is_minimal(L, B);
        out.push_back(std::move(rec));
    }
    return out;
}

/// Scan a5 in [a4, a5max] over quinaries extending a rank-4 prefix.
inline std::vector<ClassificationRecord> search_rank5(const DiagonalLattice& prefix, i64 a5max,
                                                      i64 B) {
    if (prefix.rank() != 4) throw RankTooSmall("rank-5 search needs a rank-4 prefix");
    std::vector<ClassificationRecord> out;
    for (i64 a5 = prefix.coeff(3); a5 <= a5max; ++a5) {
        DiagonalLattice L = prefix.insert(a5);
        if (!L.primitive()) continue;
        ClassificationRecord rec{L, regular_verdict(L, B), false, ""};
        if (rec.verdict.confirmed()) rec.minimal = is_minimal(L, B);
        for (const auto& row : tables::table6()) {
            tables::Triple t{prefix.coeff(0), prefix.coeff(1), prefix.coeff(2)};
            if (t != row.t) continue;
            for (int r = 1; r <= 8; ++r) {
                if (prefix.coeff(3) != pow_i64(5, row.e4_alpha * r + row.e4_beta)) continue;
                for (i64 s : tables::table6_s_values())
                    if (a5 == s * pow_i64(5, row.e5_alpha * r + row.e5_beta))
                        rec.note = "table6 r=" + std::to_string(r) + " s=" + std::to_string(s);
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

struct ASets {
    std::vector<i64> plus, minus, plus_prime, minus_prime;
};

/// A_+-(p) = primes q <= p with (q/p) = +-1; primed variants drop 2.
inline ASets a_sets(i64 p) {
    if (p == 2 || !is_prime(p)) throw Error("a_sets expects an odd prime");
    ASets out;
    for (i64 q : primes_upto(p)) {
        int l = legendre(q, p);
        if (l == 1) out.plus.push_back(q);
        if (l == -1) out.minus.push_back(q);
    }
    for (i64 q : out.plus)
        if (q != 2) out.plus_prime.push_back(q);
    for (i64 q : out.minus)
        if (q != 2) out.minus_prime.push_back(q);
    return out;
}

/// Forced-basis newness verifier: walk the probe norms; a probe forces a new
/// basis index when every vector of that norm touches exactly one new index
/// with coordinate +-1 and the touched indices form a single orbit of equal
/// coefficients (one representative is then fixed, as in the proof's
/// coordinate interchange).  True iff all indices end up forced.
inline bool forced_new_check(const DiagonalLattice& L, const std::vector<i64>& probes) {
    const int k = L.rank();
    std::vector<bool> forced(static_cast<size_t>(k), false);
    for (i64 n : probes) {
        auto vs = vectors_with_norm(L, n);
        if (vs.empty()) throw ProbeNotRepresented();
        std::vector<int> new_idx;
        bool usable = true;
        for (const auto& v : vs) {
            int outside = -1;
            int count = 0;
            for (int i = 0; i < k; ++i) {
                if (v[static_cast<size_t>(i)] == 0 || forced[static_cast<size_t>(i)]) continue;
                ++count;
                outside = i;
            }
            if (count != 1 || std::abs(v[static_cast<size_t>(outside)]) != 1) {
                usable = false;
                break;
            }
            new_idx.push_back(outside);
        }
        if (!usable || new_idx.empty()) continue;
        i64 coeff = L.coeff(new_idx.front());
        bool one_orbit = true;
        for (int i : new_idx)
            if (L.coeff(i) != coeff) one_orbit = false;
        if (!one_orbit) continue;
        forced[static_cast<size_t>(*std::min_element(new_idx.begin(), new_idx.end()))] = true;
    }
    for (bool f : forced)
        if (!f) return false;
    return true;
}

}  // namespace reglat
