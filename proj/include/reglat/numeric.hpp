#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace reglat {

using i64 = std::int64_t;
using i128 = __int128;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
    using Error::Error;
};

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer product overflows 64 bits");
    return r;
}

inline i64 isqrt(i64 n) {
    if (n < 0) return -1;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt(n);
    return r * r == n;
}

/// p-adic valuation of n (n != 0).
inline int ord_p(i64 p, i64 n) {
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

inline i64 pow_i64(i64 b, int e) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

inline i64 mod_pow(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = static_cast<i64>(static_cast<i128>(r) * b % m);
        b = static_cast<i64>(static_cast<i128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

/// Legendre symbol (a/p) for odd prime p: 0, 1 or -1.
inline int legendre(i64 a, i64 p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Smallest positive quadratic nonresidue mod odd p (the canonical Delta_p).
inline i64 smallest_nonresidue(i64 p) {
    for (i64 u = 2; u < p; ++u)
        if (legendre(u, p) == -1) return u;
    throw Error("no nonresidue found; p is not an odd prime");
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<i64> primes_upto(i64 n) {
    std::vector<bool> s(static_cast<size_t>(n) + 1, true);
    std::vector<i64> out;
    for (i64 i = 2; i <= n; ++i) {
        if (!s[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (i64 j = i * i; j <= n; j += i) s[static_cast<size_t>(j)] = false;
    }
    return out;
}

inline i64 gcd_i64(i64 a, i64 b) {
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace reglat
