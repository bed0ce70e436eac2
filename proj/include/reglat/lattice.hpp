#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "reglat/numeric.hpp"

namespace reglat {

struct EmptyLattice : Error {
    EmptyLattice() : Error("lattice needs at least one coefficient") {}
};
struct NonPositiveCoefficient : Error {
    NonPositiveCoefficient() : Error("coefficients must be positive") {}
};
struct IndexOutOfRange : Error {
    IndexOutOfRange() : Error("coefficient index out of range") {}
};
struct RankTooSmall : Error {
    RankTooSmall(const char* what = "rank too small for this operation") : Error(what) {}
};
struct NotPrimitive : Error {
    NotPrimitive() : Error("lattice must be primitive (gcd of coefficients 1)") {}
};
struct ParseError : Error {
    using Error::Error;
};

// Geometric growth in the parametric families (2^{r+5}, 2^4 3^{2r}, ...) stays
// far below this; products are overflow-checked separately.
inline constexpr i64 kMaxCoefficient = i64{1} << 62;

/// An ascending coefficient vector (an element of N(k)); the raw content of a
/// DiagonalLattice.
using CoefficientVector = std::vector<i64>;

/// Positive-definite diagonal Z-lattice <a_1,...,a_k>, coefficients kept
/// sorted ascending. Immutable after construction.
class DiagonalLattice {
  public:
    explicit DiagonalLattice(std::vector<i64> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw EmptyLattice();
        for (i64 a : coeffs_)
            if (a < 1 || a > kMaxCoefficient) throw NonPositiveCoefficient();
        std::sort(coeffs_.begin(), coeffs_.end());
    }

    DiagonalLattice(std::initializer_list<i64> coeffs)
        : DiagonalLattice(std::vector<i64>(coeffs)) {}

    int rank() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<i64>& coeffs() const { return coeffs_; }
    i64 coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }

    i64 discriminant() const {
        i64 d = 1;
        for (i64 a : coeffs_) d = checked_mul(d, a);
        return d;
    }

    bool primitive() const {
        i64 g = 0;
        for (i64 a : coeffs_) g = std::gcd(g, a);
        return g == 1;
    }

    /// Remove the i-th coefficient (0-based). Rank must stay >= 1.
    DiagonalLattice remove_index(int i) const {
        if (rank() < 2) throw RankTooSmall("cannot remove from a rank-1 lattice");
        if (i < 0 || i >= rank()) throw IndexOutOfRange();
        std::vector<i64> c = coeffs_;
        c.erase(c.begin() + i);
        return DiagonalLattice(std::move(c));
    }

    /// J = L \perp <n>.
    DiagonalLattice insert(i64 n) const {
        if (n < 1) throw NonPositiveCoefficient();
        std::vector<i64> c = coeffs_;
        c.push_back(n);
        return DiagonalLattice(std::move(c));
    }

    /// Primes dividing 2 dL, ascending; always contains 2.
    std::vector<i64> bad_primes() const {
        i64 d = checked_mul(2, discriminant());
        std::vector<i64> ps;
        for (i64 q = 2; q * q <= d; ++q) {
            if (d % q == 0) {
                ps.push_back(q);
                while (d % q == 0) d /= q;
            }
        }
        if (d > 1) ps.push_back(d);
        return ps;
    }

    bool operator==(const DiagonalLattice& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const DiagonalLattice& o) const { return !(*this == o); }
    bool operator<(const DiagonalLattice& o) const { return coeffs_ < o.coeffs_; }

    std::string to_string() const {
        std::ostringstream os;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) os << ',';
            os << coeffs_[i];
        }
        return os.str();
    }

    /// Parse the textual lattice format: comma-separated positive integers.
    static DiagonalLattice parse(const std::string& text) {
        std::vector<i64> c;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            i64 v = 0;
            try {
                v = std::stoll(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError("invalid coefficient '" + tok + "'");
            }
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw ParseError("invalid coefficient '" + tok + "'");
            c.push_back(v);
        }
        if (c.empty()) throw EmptyLattice();
        for (i64 v : c)
            if (v < 1) throw NonPositiveCoefficient();
        return DiagonalLattice(std::move(c));
    }

  private:
    std::vector<i64> coeffs_;
};

inline DiagonalLattice make_lattice(std::vector<i64> coeffs) {
    return DiagonalLattice(std::move(coeffs));
}

}  // namespace reglat
