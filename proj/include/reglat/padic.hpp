#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <utility>

#include "reglat/lattice.hpp"

namespace reglat {

struct ZeroInput : Error {
    ZeroInput() : Error("square class of zero is undefined") {}
};
struct StabilityNotReached : Error {
    using Error::Error;
};

/// Square class p^e * u * (Z_p^x)^2 of a nonzero integer.
/// For odd p, u in {1, Delta_p}; for p = 2, u = unit part mod 8.
struct PadicSquareClass {
    i64 p;
    int e;
    i64 u;
    bool operator==(const PadicSquareClass& o) const = default;
};

inline PadicSquareClass square_class_of(i64 p, i64 n) {
    if (n == 0) throw ZeroInput();
    bool neg = n < 0;
    if (neg) n = -n;
    int e = ord_p(p, n);
    i64 v = n / pow_i64(p, e);
    if (p == 2) {
        i64 u = (neg ? -v : v) % 8;
        if (u < 0) u += 8;
        return {p, e, u};
    }
    int sign = legendre(neg ? -v : v, p);
    return {p, e, sign == 1 ? 1 : smallest_nonresidue(p)};
}

namespace detail {

// Unit-coordinate search of the descent: does some assignment of the unit-block
// coordinates mod p^delta (at least one a p-adic unit) and scaled-block
// coordinates mod p^{delta-1} hit n mod p^delta?  delta = 1 + 2 ord_p(2), so a
// hit lifts by Hensel in the unit coordinate.  Layers are kept so a witness
// assignment can be reconstructed for certificates.
struct CaseA {
    i64 p = 0;
    i64 mod = 0;
    // per-coordinate contribution lists: (value mod p^delta, residue, is_unit)
    std::vector<std::vector<std::array<i64, 3>>> contribs;
    // layers[i]: reachable (sum, any-unit-flag) after i coordinates; index sum*2+flag
    std::vector<std::vector<uint8_t>> layers;

    CaseA(const std::vector<i64>& coeffs, i64 prime) : p(prime) {
        if (p > 10'000'019) throw Error("prime too large for local tabulation");
        int delta = p == 2 ? 3 : 1;
        mod = pow_i64(p, delta);
        for (i64 a : coeffs) {
            std::vector<std::array<i64, 3>> c;
            if (a % p != 0) {
                for (i64 x = 0; x < mod; ++x)
                    c.push_back({a % mod * x % mod * x % mod, x, x % p != 0 ? i64{1} : i64{0}});
            } else {
                i64 lim = pow_i64(p, delta - 1);
                for (i64 x = 0; x < lim; ++x)
                    c.push_back({a % mod * x % mod * x % mod, x, 0});
            }
            // distinct (value, unit-flag) pairs suffice; keep one residue each
            std::sort(c.begin(), c.end(), [](const auto& l, const auto& r) {
                return std::tie(l[0], l[2], l[1]) < std::tie(r[0], r[2], r[1]);
            });
            c.erase(std::unique(c.begin(), c.end(),
                                [](const auto& l, const auto& r) {
                                    return l[0] == r[0] && l[2] == r[2];
                                }),
                    c.end());
            contribs.push_back(std::move(c));
        }
        layers.emplace_back(static_cast<size_t>(mod) * 2, 0);
        layers[0][0] = 1;
        for (const auto& c : contribs) {
            std::vector<uint8_t> next(static_cast<size_t>(mod) * 2, 0);
            const auto& prev = layers.back();
            for (i64 s = 0; s < mod; ++s)
                for (int f = 0; f < 2; ++f) {
                    if (!prev[static_cast<size_t>(s) * 2 + f]) continue;
                    for (const auto& [v, x, unit] : c) {
                        i64 t = (s + v) % mod;
                        next[static_cast<size_t>(t) * 2 + (f | (unit ? 1 : 0))] = 1;
                    }
                }
            layers.push_back(std::move(next));
        }
    }

    bool hits(i64 nres) const {
        nres %= mod;
        return layers.back()[static_cast<size_t>(nres) * 2 + 1] != 0;
    }

    /// Walk the layers backwards to produce one accepting assignment.
    std::vector<i64> witness(i64 nres) const {
        nres %= mod;
        std::vector<i64> xs(contribs.size(), 0);
        i64 s = nres;
        int f = 1;
        for (int i = static_cast<int>(contribs.size()) - 1; i >= 0; --i) {
            bool found = false;
            for (const auto& [v, x, unit] : contribs[static_cast<size_t>(i)]) {
                i64 sp = (s - v) % mod;
                if (sp < 0) sp += mod;
                for (int fp = 0; fp < 2 && !found; ++fp) {
                    if ((fp | (unit ? 1 : 0)) != f) continue;
                    if (!layers[static_cast<size_t>(i)][static_cast<size_t>(sp) * 2 + fp]) continue;
                    xs[static_cast<size_t>(i)] = x;
                    s = sp;
                    f = fp;
                    found = true;
                }
                if (found) break;
            }
            if (!found) throw Error("case-a witness reconstruction failed");
        }
        return xs;
    }
};

}  // namespace detail

/// One level of the valuation descent, for re-checkable refutation witnesses.
struct DescentStep {
    std::vector<i64> coeffs;
    i64 target;
};

/// Accepting data of a local representation: the descent chain and the
/// residue assignment found at the final level.
struct LocalCertificate {
    i64 p = 0;
    std::vector<DescentStep> chain;
    std::vector<i64> residues;
    i64 modulus = 0;

    /// Recompute the congruence and the descent rule from scratch.
    bool verify() const {
        if (chain.empty()) return false;
        for (size_t s = 0; s + 1 < chain.size(); ++s) {
            if (chain[s].target % p != 0) return false;
            if (chain[s + 1].target != chain[s].target / p) return false;
            std::vector<i64> next;
            for (i64 a : chain[s].coeffs)
                next.push_back(a % p == 0 ? a / p : checked_mul(a, p));
            std::sort(next.begin(), next.end());
            if (chain[s + 1].coeffs != next) return false;
        }
        const auto& last = chain.back();
        if (residues.size() != last.coeffs.size()) return false;
        i64 sum = 0;
        bool unit_seen = false;
        for (size_t i = 0; i < residues.size(); ++i) {
            i64 a = last.coeffs[i] % modulus;
            sum = (sum + a * residues[i] % modulus * residues[i]) % modulus;
            if (last.coeffs[i] % p != 0 && residues[i] % p != 0) unit_seen = true;
        }
        return unit_seen && sum == ((last.target % modulus) + modulus) % modulus;
    }
};

/// Exact: is n represented by L_p?  Valuation descent: split off the
/// unit-coefficient block, search for a Hensel-liftable congruence solution,
/// otherwise divide the form and n by p and recurse.
inline bool locally_represents(const DiagonalLattice& L, i64 p, i64 n,
                               LocalCertificate* cert = nullptr) {
    if (n < 1) throw Error("locally_represents expects n >= 1");
    std::vector<i64> coeffs = L.coeffs();
    if (cert) {
        cert->p = p;
        cert->chain.clear();
    }
    while (true) {
        std::sort(coeffs.begin(), coeffs.end());
        if (cert) cert->chain.push_back({coeffs, n});
        detail::CaseA dp(coeffs, p);
        if (dp.hits(n)) {
            if (cert) {
                cert->residues = dp.witness(n % dp.mod);
                cert->modulus = dp.mod;
            }
            return true;
        }
        if (n % p != 0) return false;
        std::vector<i64> next;
        for (i64 a : coeffs)
            next.push_back(a % p == 0 ? a / p : checked_mul(a, p));
        coeffs = std::move(next);
        n /= p;
    }
}

/// Same decision for n = p^e u (p coprime to u) without materializing p^e u,
/// which overflows for large primes; used to build the class tables.
inline bool locally_represents_class(const DiagonalLattice& L, i64 p, int e, i64 u) {
    if (e < 0 || u % p == 0) throw Error("class representative needs e >= 0 and p coprime to u");
    std::vector<i64> coeffs = L.coeffs();
    int delta = p == 2 ? 3 : 1;
    i64 mod = pow_i64(p, delta);
    while (true) {
        std::sort(coeffs.begin(), coeffs.end());
        i64 nres = 0;
        if (e < delta) {
            i64 um = u % mod;
            if (um < 0) um += mod;
            nres = pow_i64(p, e) * um % mod;
        }
        detail::CaseA dp(coeffs, p);
        if (dp.hits(nres)) return true;
        if (e == 0) return false;
        std::vector<i64> next;
        for (i64 a : coeffs)
            next.push_back(a % p == 0 ? a / p : checked_mul(a, p));
        coeffs = std::move(next);
        --e;
    }
}

/// Q(L_p) as a union of square classes: membership table over (e, u) for
/// e < E+2, periodic with period 2 from E on.
class LocalRepSet {
  public:
    LocalRepSet(i64 p, int E, std::vector<i64> units, std::vector<uint8_t> table)
        : p_(p), E_(E), units_(std::move(units)), table_(std::move(table)) {
        if (p_ != 2) {
            qr_.assign(static_cast<size_t>(p_), 0);
            for (i64 x = 1; x < p_; ++x) qr_[static_cast<size_t>(x * x % p_)] = 1;
        }
    }

    i64 p() const { return p_; }
    int threshold() const { return E_; }
    const std::vector<i64>& units() const { return units_; }

    bool member(int e, i64 u) const {
        if (e >= E_ + 2) e = E_ + (e - E_) % 2;
        size_t ui = unit_index(u);
        return table_[static_cast<size_t>(e) * units_.size() + ui] != 0;
    }

    bool member_n(i64 n) const {
        if (n < 1) throw Error("member_n expects n >= 1");
        int e = 0;
        i64 v = n;
        while (v % p_ == 0) {
            v /= p_;
            ++e;
        }
        i64 u = p_ == 2 ? v % 8 : (qr_[static_cast<size_t>(v % p_)] ? 1 : units_[1]);
        return member(e, u);
    }

    std::string to_json_string() const {
        std::ostringstream os;
        os << "{\"p\":" << p_ << ",\"E\":" << E_ << ",\"classes\":[";
        bool first = true;
        for (int e = 0; e < E_ + 2; ++e)
            for (i64 u : units_) {
                if (!first) os << ',';
                first = false;
                os << "{\"e\":" << e << ",\"u\":" << u
                   << ",\"member\":" << (member(e, u) ? "true" : "false") << "}";
            }
        os << "]}";
        return os.str();
    }

  private:
    size_t unit_index(i64 u) const {
        for (size_t i = 0; i < units_.size(); ++i)
            if (units_[i] == u) return i;
        throw Error("unit representative not in class list");
    }

    i64 p_;
    int E_;
    std::vector<i64> units_;
    std::vector<uint8_t> table_;
    std::vector<char> qr_;
};

inline LocalRepSet local_rep_set(const DiagonalLattice& L, i64 p) {
    std::vector<i64> units =
        p == 2 ? std::vector<i64>{1, 3, 5, 7} : std::vector<i64>{1, smallest_nonresidue(p)};
    int E = 0;
    for (i64 a : L.coeffs()) E = std::max(E, ord_p(p, a));
    E += (p == 2 ? 2 : 0) + 1;
    const int cap = E + 40;
    for (; E <= cap; ++E) {
        bool stable = true;
        for (int e = E; e <= E + 4 && stable; ++e)
            for (i64 u : units)
                if (locally_represents_class(L, p, e, u) !=
                    locally_represents_class(L, p, e + 2, u)) {
                    stable = false;
                    break;
                }
        if (!stable) continue;
        std::vector<uint8_t> table;
        for (int e = 0; e < E + 2; ++e)
            for (i64 u : units)
                table.push_back(locally_represents_class(L, p, e, u) ? 1 : 0);
        return LocalRepSet(p, E, units, std::move(table));
    }
    throw StabilityNotReached("local set of <" + L.to_string() + "> at p=" + std::to_string(p) +
                              " did not stabilize");
}

/// Process-wide cache; values are immutable once inserted.
inline const LocalRepSet& local_rep_set_cached(const DiagonalLattice& L, i64 p) {
    static std::mutex mu;
    static std::map<std::pair<std::vector<i64>, i64>, std::unique_ptr<LocalRepSet>> cache;
    std::pair<std::vector<i64>, i64> key{L.coeffs(), p};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto value = std::make_unique<LocalRepSet>(local_rep_set(L, p));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(std::move(key), std::move(value));
    return *it->second;
}

/// Local redundancy criterion of gamma in L at p.
/// Odd p: gamma Z_p contained in Q(L_p).  p = 2: the three-part criterion on
/// unit-class sets at exponents ord-2, ord-1 plus gamma Z_2 in Q(L_2).
inline bool locally_redundant(const DiagonalLattice& L, i64 p, i64 gamma) {
    if (gamma < 1) throw Error("locally_redundant expects gamma >= 1");
    const LocalRepSet& ls = local_rep_set_cached(L, p);
    int g = ord_p(p, gamma);
    auto tail_full = [&](int from) {
        int hi = std::max(from + 2, ls.threshold() + 2);
        for (int e = from; e < hi; ++e)
            for (i64 u : ls.units())
                if (!ls.member(e, u)) return false;
        return true;
    };
    if (p != 2) return tail_full(g);

    auto unit_members = [&](int e) {
        std::vector<i64> s;
        for (i64 u : {1, 3, 5, 7})
            if (ls.member(e, u)) s.push_back(u);
        return s;
    };
    if (g - 2 >= 0) {
        auto s = unit_members(g - 2);
        bool ok = s.empty() || s == std::vector<i64>{1, 5} || s == std::vector<i64>{3, 7} ||
                  s == std::vector<i64>{1, 3, 5, 7};
        if (!ok) return false;
    }
    if (g - 1 >= 0) {
        auto s = unit_members(g - 1);
        if (!s.empty() && s != std::vector<i64>{1, 3, 5, 7}) return false;
    }
    return tail_full(g);
}

}  // namespace reglat
