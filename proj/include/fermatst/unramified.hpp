#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "fermatst/cyclotomic.hpp"
#include "fermatst/padic.hpp"

namespace fermatst {

// A place of Q(zeta_M) above an odd prime p not dividing M: the canonical
// (lexicographically smallest) irreducible degree-f factor of Phi_M mod p,
// Hensel-lifted to the requested precision.  The class of x is then a
// primitive M-th root of unity in Z_q = Z_p[x]/(h), and zeta_M maps to it.
struct FrobeniusPlace {
    long p = 0;
    long conductor = 1;
    long k = 1;
    long f = 1;                   // inertia degree = ord of p mod conductor
    bool geometric = true;        // orientation of Frobenius
    std::vector<mpz_class> factor;  // monic, degree f, coefficients mod p^k

    std::string str() const;
};

// Construction is memoized on (p, conductor, k); the mod-p factor choice is
// deterministic, and lifts at different k are Hensel-consistent.
FrobeniusPlace frobenius_place(long p, long conductor, long k, bool geometric = true);

// Coefficients (constant term first) of the canonical irreducible factor of
// Phi_conductor mod p; the residue-field presentation shared by the place.
std::vector<long> place_factor_mod_p(long p, long conductor);

// u(Frob_p): p^{-1} mod conductor for the geometric orientation, p for the
// arithmetic one.
long frobenius_unit(const FrobeniusPlace& place);

// Element of the unramified extension Z_q modulo p^k, coordinates over the
// power basis of the place's factor.
struct UnramifiedElement {
    long p = 0;
    long k = 1;
    std::shared_ptr<const FrobeniusPlace> place;
    std::vector<mpz_class> c;  // length f, each in [0, p^k)

    UnramifiedElement() = default;

    static UnramifiedElement from_padic(const PadicInt& x, const FrobeniusPlace& place);
    static UnramifiedElement root_of_unity_power(const FrobeniusPlace& place, long t);  // xi^t

    UnramifiedElement operator+(const UnramifiedElement& o) const;
    UnramifiedElement operator-(const UnramifiedElement& o) const;
    UnramifiedElement operator*(const UnramifiedElement& o) const;
    UnramifiedElement inverse() const;  // unit only
    bool is_unit() const;
    bool operator==(const UnramifiedElement& o) const;
    bool congruent_mod(const UnramifiedElement& o, long k2) const;

    std::string str() const;
};

// Evaluate x (conductor dividing the place's) at the place's root, mod p^k.
// Rational coefficients must be p-integral.
UnramifiedElement embed_cyclotomic_padic(const CycloNumber& x, const FrobeniusPlace& place);

struct PadicRecognition {
    CycloNumber value;
    bool verified = false;
    std::string diagnostics;
};

// Inverse of the embedding on bounded-height elements: find the unique
// rational coefficient vector of height <= height_bound with
// embed(value) = y mod p^k, via lattice reduction on the congruence
// lattice.  Requires p^k > 2 height_bound^2 phi(conductor)^2.
PadicRecognition recognize_padic(const UnramifiedElement& y, const mpz_class& height_bound);

}  // namespace fermatst
