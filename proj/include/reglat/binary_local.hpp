#pragma once

#include <array>

#include "reglat/padic.hpp"

namespace reglat {

struct PrecisionUnstable : Error {
    using Error::Error;
};

namespace detail {

inline int vord(i64 p, i128 n, int cap) {
    if (n == 0) return cap;
    if (n < 0) n = -n;
    int e = 0;
    while (n % p == 0 && e < cap) {
        n /= p;
        ++e;
    }
    return e;
}

// Congruence-tree search for a pair x, y in L_p with Q(x)=b1, Q(y)=b2,
// B(x,y)=0.  Nodes fix x, y mod p^j; children solve the linearized lifting
// conditions; a node is accepted outright when some 3x3 Jacobian minor of
// valuation tau certifies Newton convergence (all residuals divisible by
// p^{2 tau + 1}).  At an exact solution with b1 b2 != 0 the Jacobian has full
// rank over Q_p, so every representable pair is eventually accepted and a
// finite tree means no pair exists.
class PairSearch {
  public:
    PairSearch(const std::vector<i64>& coeffs, i64 p, i64 b1, i64 b2, i64 budget)
        : a_(coeffs), k_(coeffs.size()), p_(p), b1_(b1), b2_(b2), budget_(budget) {
        int kappa = vord(p, i128{4} * b1 * b2, 40) + 2 * (p == 2 ? 1 : 0) + 3;
        m_ = kappa + 2;
        cap_ = m_ + 2;
    }

    /// 1 = pair exists, 0 = none, -1 = surface solutions only / budget hit.
    int run() {
        std::vector<i64> x(k_, 0), y(k_, 0);
        int r = dfs(0, x, y);
        if (r == 1) return 1;
        if (r == -1 || surface_) return -1;
        return 0;
    }

  private:
    std::array<i128, 3> residuals(const std::vector<i64>& x, const std::vector<i64>& y) const {
        i128 q1 = 0, q2 = 0, bv = 0;
        for (size_t i = 0; i < k_; ++i) {
            q1 += i128{a_[i]} * x[i] * x[i];
            q2 += i128{a_[i]} * y[i] * y[i];
            bv += i128{a_[i]} * x[i] * y[i];
        }
        return {b1_ - q1, b2_ - q2, -bv};
    }

    bool viable(int j, const std::array<i128, 3>& r) const {
        int w = std::min<int>(m_, j + ((p_ == 2 && j >= 1) ? 1 : 0));
        if (vord(p_, r[0], cap_) < w || vord(p_, r[1], cap_) < w) return false;
        return vord(p_, r[2], cap_) >= std::min<int>(m_, j);
    }

    // Jacobian minors are computed modulo p^cap: a zero residue only means
    // tau >= cap (no acceptance), so reduced arithmetic stays sound.
    bool hensel_accept(const std::vector<i64>& x, const std::vector<i64>& y,
                       const std::array<i128, 3>& r) const {
        int rmin = cap_;
        for (const auto& ri : r) rmin = std::min(rmin, vord(p_, ri, cap_));
        const i64 pc = pow_i64(p_, cap_);
        auto mul = [pc](i64 a, i64 b) { return static_cast<i64>(i128{a} * b % pc); };
        auto sub = [pc](i64 a, i64 b) { return ((a - b) % pc + pc) % pc; };
        // Jacobian columns: dx_i -> (2 a x_i, 0, a y_i); dy_i -> (0, 2 a y_i, a x_i)
        std::vector<std::array<i64, 3>> cols(2 * k_);
        for (size_t i = 0; i < k_; ++i) {
            i64 am = a_[i] % pc;
            cols[i] = {mul(2 * am % pc, x[i] % pc), 0, mul(am, y[i] % pc)};
            cols[k_ + i] = {0, mul(2 * am % pc, y[i] % pc), mul(am, x[i] % pc)};
        }
        size_t n = 2 * k_;
        for (size_t c0 = 0; c0 < n; ++c0)
            for (size_t c1 = c0 + 1; c1 < n; ++c1)
                for (size_t c2 = c1 + 1; c2 < n; ++c2) {
                    i64 det = sub(mul(cols[c0][0],
                                      sub(mul(cols[c1][1], cols[c2][2]), mul(cols[c1][2], cols[c2][1]))),
                                  mul(cols[c1][0],
                                      sub(mul(cols[c0][1], cols[c2][2]), mul(cols[c0][2], cols[c2][1]))));
                    det = (det + mul(cols[c2][0],
                                     sub(mul(cols[c0][1], cols[c1][2]), mul(cols[c0][2], cols[c1][1])))) %
                          pc;
                    if (det == 0) continue;
                    int tau = vord(p_, det, cap_);
                    if (2 * tau + 1 <= rmin) return true;
                }
        return false;
    }

    // Gaussian elimination over F_p; returns false if inconsistent, else fills
    // a particular solution and a kernel basis.
    bool solve_mod_p(std::vector<std::vector<i64>>& rows, std::vector<i64>& rhs,
                     std::vector<i64>& part, std::vector<std::vector<i64>>& basis) const {
        size_t n = 2 * k_;
        size_t rr = 0;
        std::vector<size_t> piv;
        for (size_t col = 0; col < n && rr < rows.size(); ++col) {
            size_t sel = rr;
            while (sel < rows.size() && rows[sel][col] % p_ == 0) ++sel;
            if (sel == rows.size()) continue;
            std::swap(rows[rr], rows[sel]);
            std::swap(rhs[rr], rhs[sel]);
            i64 inv = mod_pow(rows[rr][col], p_ - 2, p_);
            for (size_t t = 0; t < n; ++t) rows[rr][t] = rows[rr][t] * inv % p_;
            rhs[rr] = rhs[rr] * inv % p_;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i == rr || rows[i][col] % p_ == 0) continue;
                i64 f = rows[i][col];
                for (size_t t = 0; t < n; ++t)
                    rows[i][t] = ((rows[i][t] - f * rows[rr][t]) % p_ + p_) % p_;
                rhs[i] = ((rhs[i] - f * rhs[rr]) % p_ + p_) % p_;
            }
            piv.push_back(col);
            ++rr;
        }
        for (size_t i = rr; i < rows.size(); ++i)
            if (rhs[i] % p_ != 0) return false;
        part.assign(n, 0);
        for (size_t i = 0; i < piv.size(); ++i) part[piv[i]] = rhs[i] % p_;
        basis.clear();
        for (size_t f = 0; f < n; ++f) {
            if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
            std::vector<i64> v(n, 0);
            v[f] = 1;
            for (size_t i = 0; i < piv.size(); ++i)
                v[piv[i]] = (p_ - rows[i][f] % p_) % p_;
            basis.push_back(std::move(v));
        }
        return true;
    }

    int dfs(int j, std::vector<i64>& x, std::vector<i64>& y) {
        if (++nodes_ > budget_) return -1;
        auto r = residuals(x, y);
        if (!viable(j, r)) return 0;
        if (hensel_accept(x, y, r)) return 1;
        if (j >= m_) {
            surface_ = true;
            return 0;
        }
        i64 pj = pow_i64(p_, j);
        size_t n = 2 * k_;

        std::vector<std::vector<i64>> rows;
        std::vector<i64> rhs;
        if (j == 0) {
            // depth 0 -> 1: enumerate all digit pairs (checked by viability below)
            rows.clear();
        } else if (p_ == 2) {
            i64 r0 = static_cast<i64>(r[0] / (2 * pj) % 2);
            i64 r1 = static_cast<i64>(r[1] / (2 * pj) % 2);
            i64 r2 = static_cast<i64>(r[2] / pj % 2);
            if (j + 1 < m_) {
                std::vector<i64> row(n, 0);
                for (size_t i = 0; i < k_; ++i)
                    row[i] = ((a_[i] & 1) * (x[i] & 1) + (j == 1 ? (a_[i] & 1) : 0)) & 1;
                rows.push_back(row);
                rhs.push_back((r0 % 2 + 2) % 2);
                std::vector<i64> row2(n, 0);
                for (size_t i = 0; i < k_; ++i)
                    row2[k_ + i] = ((a_[i] & 1) * (y[i] & 1) + (j == 1 ? (a_[i] & 1) : 0)) & 1;
                rows.push_back(row2);
                rhs.push_back((r1 % 2 + 2) % 2);
            }
            if (j < m_) {
                std::vector<i64> row(n, 0);
                for (size_t i = 0; i < k_; ++i) {
                    row[i] = (a_[i] & 1) * (y[i] & 1);
                    row[k_ + i] = (a_[i] & 1) * (x[i] & 1);
                }
                rows.push_back(row);
                rhs.push_back((r2 % 2 + 2) % 2);
            }
        } else {
            if (j + 1 <= m_) {
                std::vector<i64> row(n, 0), row2(n, 0), row3(n, 0);
                for (size_t i = 0; i < k_; ++i) {
                    i64 am = a_[i] % p_;
                    row[i] = 2 * am % p_ * (x[i] % p_) % p_;
                    row2[k_ + i] = 2 * am % p_ * (y[i] % p_) % p_;
                    row3[i] = am * (y[i] % p_) % p_;
                    row3[k_ + i] = am * (x[i] % p_) % p_;
                }
                rows.push_back(row);
                rhs.push_back(static_cast<i64>(((r[0] / pj) % p_ + p_) % p_));
                rows.push_back(row2);
                rhs.push_back(static_cast<i64>(((r[1] / pj) % p_ + p_) % p_));
                rows.push_back(row3);
                rhs.push_back(static_cast<i64>(((r[2] / pj) % p_ + p_) % p_));
            }
        }

        std::vector<i64> part(n, 0);
        std::vector<std::vector<i64>> basis;
        if (rows.empty()) {
            basis.assign(n, std::vector<i64>(n, 0));
            for (size_t i = 0; i < n; ++i) basis[i][i] = 1;
        } else if (!solve_mod_p(rows, rhs, part, basis)) {
            return 0;
        }
        if (basis.size() > 14) return -1;  // degenerate blow-up; give up loudly

        std::vector<i64> d(n);
        std::vector<i64> combo(basis.size(), 0);
        while (true) {
            for (size_t t = 0; t < n; ++t) d[t] = part[t];
            for (size_t bi = 0; bi < basis.size(); ++bi)
                if (combo[bi])
                    for (size_t t = 0; t < n; ++t) d[t] = (d[t] + combo[bi] * basis[bi][t]) % p_;
            for (size_t i = 0; i < k_; ++i) {
                x[i] += pj * d[i];
                y[i] += pj * d[k_ + i];
            }
            int res = dfs(j + 1, x, y);
            for (size_t i = 0; i < k_; ++i) {
                x[i] -= pj * d[i];
                y[i] -= pj * d[k_ + i];
            }
            if (res != 0) return res;
            size_t bi = 0;
            while (bi < basis.size() && ++combo[bi] == p_) combo[bi++] = 0;
            if (bi == basis.size()) break;
        }
        return 0;
    }

    std::vector<i64> a_;
    size_t k_;
    i64 p_, b1_, b2_;
    i64 budget_;
    int m_ = 0, cap_ = 0;
    i64 nodes_ = 0;
    bool surface_ = false;
};

}  // namespace detail

/// Does L_p represent the binary lattice <b1, b2> (a pair x, y with
/// Q(x)=b1, Q(y)=b2, B(x,y)=0)?
///
/// For odd p with p coprime to b1 b2 the answer is decided exactly over F_p:
/// a Z_p pair reduces to an F_p pair on the unit-coefficient block, where any
/// solution has a full-rank Jacobian and lifts; Witt's theorem makes the
/// orthogonal-complement step independent of the witness.  Otherwise a
/// congruence-tree search with a Newton acceptance certificate decides; an
/// undecided search (precision window exhausted) surfaces as
/// PrecisionUnstable, never as a silent answer.
inline bool represents_binary_locally(const DiagonalLattice& L, i64 p, i64 b1, i64 b2) {
    if (b1 == 0 || b2 == 0) throw ZeroInput();
    if (p != 2 && b1 % p != 0 && b2 % p != 0) {
        std::vector<i64> units;
        for (i64 a : L.coeffs())
            if (a % p != 0) units.push_back(a);
        if (units.size() >= 3) return true;
        if (units.size() == 2)
            return legendre(b1 % p * (b2 % p) % p * (units[0] % p) % p * (units[1] % p) % p, p) == 1;
        return false;
    }
    detail::PairSearch search(L.coeffs(), p, b1, b2, 4'000'000);
    int r = search.run();
    if (r == -1)
        throw PrecisionUnstable("binary search for <" + std::to_string(b1) + "," +
                                std::to_string(b2) + "> into <" + L.to_string() + "> at p=" +
                                std::to_string(p) + " did not resolve");
    return r == 1;
}

/// 2-stable: <1,3> or <1,7> embeds in L_2.  Odd p: <1,-1> embeds in L_p, or
/// L_p matches the anisotropic quaternary <1,-D,p,-pD> by Jordan invariants.
inline bool is_p_stable(const DiagonalLattice& L, i64 p) {
    if (L.rank() < 4) throw RankTooSmall("p-stability is defined for rank >= 4");
    if (p == 2)
        return represents_binary_locally(L, 2, 1, 3) || represents_binary_locally(L, 2, 1, 7);
    if (represents_binary_locally(L, p, 1, -1)) return true;
    if (L.rank() != 4) return false;
    std::vector<i64> units, scaled;
    for (i64 a : L.coeffs())
        (a % p != 0 ? units : scaled).push_back(a);
    if (units.size() != 2 || scaled.size() != 2) return false;
    if (scaled[0] % (p * p) == 0 || scaled[1] % (p * p) == 0) return false;
    int target = legendre(-smallest_nonresidue(p), p);
    return legendre(units[0] % p * (units[1] % p) % p, p) == target &&
           legendre(scaled[0] / p % p * (scaled[1] / p % p) % p, p) == target;
}

}  // namespace reglat
