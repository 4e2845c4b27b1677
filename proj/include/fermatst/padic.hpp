#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fermatst/characters.hpp"

namespace fermatst {

mpz_class pow_long(long base, long exp);

// Element of Z_p known modulo p^k.
struct PadicInt {
    long p = 2;
    long k = 1;
    mpz_class r;  // in [0, p^k)

    PadicInt() = default;
    PadicInt(long p_, long k_, const mpz_class& val);

    mpz_class modulus() const { return pow_long(p, k); }
    static PadicInt from_rational(const mpq_class& x, long p, long k);

    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator*(const PadicInt& o) const;
    PadicInt operator/(const PadicInt& o) const;  // o must be a unit
    PadicInt operator-() const;
    PadicInt inverse() const;
    PadicInt pow(long e) const;

    bool is_unit() const { return r % p != 0; }
    long valuation() const;  // min(v_p(r), k)
    PadicInt truncate(long k2) const;
    bool operator==(const PadicInt& o) const = default;

    std::string str() const;
};

// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2), memoized.
const std::vector<mpq_class>& bernoulli_numbers(long n);

// Morita's p-adic Gamma function at a rational argument x in Z_p, modulo
// p^k.  Odd p uses the locally analytic expansion (Iwasawa logarithm of the
// unit-factorial interpolated through Faulhaber sums); p = 2 uses the
// defining product with two guard digits.
PadicInt morita_gamma(long p, const mpq_class& x, long k);

// Defining product evaluated at an integer representative of x modulo
// p^{k+2}; cost O(p^{k+2}).  Serves as the independent oracle for the
// series route and as the p = 2 path.
PadicInt morita_gamma_direct(long p, const mpq_class& x, long k);

// Gamma_p-hat(u alpha) = prod_j Gamma_p([u i_j]/m)^2 / Gamma_p([2 u i_j]/m),
// representatives in [1, m]; a p-adic unit.
PadicInt gamma_hat_p(long u, const GammaWord& alpha, long p, long k);

}  // namespace fermatst
