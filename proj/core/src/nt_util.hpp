#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qbarnes::detail {

inline unsigned long gcd_ul(unsigned long a, unsigned long b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

inline unsigned long lcm_ul(unsigned long a, unsigned long b) {
    return a / gcd_ul(a, b) * b;
}

inline unsigned long mulmod(unsigned long a, unsigned long b, unsigned long m) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % m);
}

inline unsigned long powmod(unsigned long base, unsigned long exp, unsigned long m) {
    unsigned long r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1UL) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1UL;
    }
    return r;
}

/// Prime-power factorization by trial division, primes ascending.
inline std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
    std::vector<std::pair<unsigned long, unsigned>> f;
    for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1U);
    return f;
}

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// Smallest primitive root mod the odd prime p.
inline unsigned long primitive_root_mod_p(unsigned long p) {
    const auto factors = factorize(p - 1);
    for (unsigned long g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, e] : factors) {
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 0; // unreachable for prime p
}

} // namespace qbarnes::detail
