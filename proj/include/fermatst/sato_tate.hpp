#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermatst/galois.hpp"
#include "fermatst/lattice.hpp"

namespace fermatst {

// Identity component of the Sato-Tate group: the compact torus cut out by
// the saturation of L_MT + <delta_1 + delta_{m-1}>.
struct IdentityComponent {
    long m = 0;
    ZMat lattice;  // HNF basis of L_ST
    long dimension = 0;
};

IdentityComponent identity_component(long m);

// Shared data for component computations.
struct STContext {
    long m = 0;
    long N = 2;
    EquationLattice mt;
    IdentityComponent ident;
    std::vector<ExponentVector> classes;  // balanced Tate classes of degree <= N
    std::vector<WordOrbit> orbits;        // orbits of their characters + antidiagonal pairs
};

STContext make_st_context(long m);

struct ComponentDescription {
    long index = 0;
    long u = 1;
    long order = 1;
    std::vector<CycloNumber> rep;  // t_j with h(omega_j) = t_j omega_{[u^{-1} j]}
    RhoMatrix rho;
    std::string witness;
};

struct STDescription {
    STContext ctx;
    std::vector<ComponentDescription> components;  // [0] is the identity
    std::vector<std::vector<long>> mult_table;
    bool closed = false;
    bool u_surjective = false;
    bool stable = false;
    std::vector<std::string> notes;

    long component_count() const { return (long)components.size(); }
};

// Exact solution of h|_{W<=N} = rho: generalized permutation representative
// in the omega basis, multiplier pinned through the polarization.  Free
// torus directions are set to 1; solutions are unique up to the identity
// torus.
std::vector<CycloNumber> solve_component(const RhoMatrix& rho, const STContext& ctx);

// Frobenius saturation: computes rho(Frob_p) for ascending primes plus
// complex conjugation, closes under composition, and stops once closed,
// u-surjective and stable for 10 further primes.
STDescription saturate(long m, long prime_budget, long k, mpfr_prec_t prec, int threads = 1);

// Exact ratio test against the identity torus.
bool in_identity_torus(const std::vector<CycloNumber>& diag, const IdentityComponent& ic);

struct MembershipResult {
    bool accepted = false;
    long component = -1;
    std::string reason;
};

// Exact membership: h given by its generalized-permutation data.
MembershipResult membership(const std::vector<std::vector<CycloNumber>>& h, const STDescription& st);
// Numeric membership with tolerance 2^{-prec/2}.
MembershipResult membership_numeric(const std::vector<std::vector<BigComplex>>& h, const STDescription& st,
                                    mpfr_prec_t prec);

}  // namespace fermatst
