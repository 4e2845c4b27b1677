#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fermatst {

// Residue of x in [0, m-1].
inline long mod_lo(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

// Representative of x mod m in [1, m]  (the convention used for Gamma
// arguments: 0 maps to m).
inline long mod_hi(long x, long m) {
    long r = mod_lo(x, m);
    return r == 0 ? m : r;
}

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

inline bool is_unit_mod(long u, long m) { return std::gcd(mod_lo(u, m), m) == 1; }

// Inverse of u modulo m; throws if gcd(u, m) != 1.
inline long inv_mod(long u, long m) {
    long a = mod_lo(u, m), b = m;
    long x0 = 1, x1 = 0;
    while (b != 0) {
        long q = a / b;
        long t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    if (a != 1) throw std::invalid_argument("inv_mod: not a unit");
    return mod_lo(x0, m);
}

inline std::vector<long> units_mod(long m) {
    std::vector<long> us;
    for (long u = 1; u < m; ++u)
        if (std::gcd(u, m) == 1) us.push_back(u);
    return us;
}

inline long euler_phi(long m) {
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Multiplicative order of a modulo m (gcd(a, m) = 1).
inline long mult_order(long a, long m) {
    if (m == 1) return 1;
    if (!is_unit_mod(a, m)) throw std::invalid_argument("mult_order: not a unit");
    long x = mod_lo(a, m), ord = 1;
    while (x != 1) {
        x = (x * (a % m)) % m;
        if (++ord > m) throw std::logic_error("mult_order: did not terminate");
    }
    return ord;
}

inline bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long> primes_below(long bound) {
    std::vector<long> ps;
    for (long n = 2; n < bound; ++n)
        if (is_prime_long(n)) ps.push_back(n);
    return ps;
}

}  // namespace fermatst
