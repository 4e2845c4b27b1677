#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "fermatst/bigfloat.hpp"

namespace fermatst {

// Coefficients of the M-th cyclotomic polynomial (degree phi(M), monic),
// index i holds the coefficient of x^i.  Memoized.
const std::vector<mpz_class>& cyclotomic_polynomial(long M);

// Element of Q(zeta_M) over the power basis 1, zeta, ..., zeta^{phi(M)-1}.
struct CycloNumber {
    long M = 1;
    std::vector<mpq_class> c;

    CycloNumber() : c(1, mpq_class(0)) {}
    explicit CycloNumber(long M_);
    CycloNumber(long M_, std::vector<mpq_class> coeffs);

    static CycloNumber from_rational(const mpq_class& q, long M = 1);
    static CycloNumber zeta(long M, long power = 1);

    long degree() const { return (long)c.size(); }
    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_part() const;  // throws if not rational

    CycloNumber operator+(const CycloNumber& o) const;
    CycloNumber operator-(const CycloNumber& o) const;
    CycloNumber operator*(const CycloNumber& o) const;
    CycloNumber operator/(const CycloNumber& o) const;
    CycloNumber operator-() const;
    CycloNumber inverse() const;
    CycloNumber pow_long(long e) const;
    bool operator==(const CycloNumber& o) const;  // lifts to lcm conductor

    // Image in the conductor-M2 power basis; M must divide M2.
    CycloNumber lift_to(long M2) const;
    // Expression in Q(zeta_M2) for M2 | M, if the element lies there.
    std::optional<CycloNumber> restrict_to(long M2) const;

    // Largest numerator/denominator absolute value over the coefficients.
    mpz_class height() const;

    std::string str() const;
};

// Automorphism zeta_M -> zeta_M^u, gcd(u, M) = 1.
CycloNumber galois_sigma(long u, const CycloNumber& x);

// Complex conjugation = sigma_{-1}.
CycloNumber cyclo_conj(const CycloNumber& x);

// Evaluation at zeta_M = exp(2 pi i / M).
BigComplex embed_complex(const CycloNumber& x, mpfr_prec_t prec);

}  // namespace fermatst
