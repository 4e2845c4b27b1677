#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermatst/characters.hpp"
#include "fermatst/cyclotomic.hpp"
#include "fermatst/numerics.hpp"
#include "fermatst/unramified.hpp"

namespace fermatst {

struct GaloisHandle {
    enum class Kind { identity, frobenius, conjugation, word };
    Kind kind = Kind::identity;
    long p = 0;                        // frobenius
    std::vector<GaloisHandle> parts;   // word (applied right to left)

    static GaloisHandle identity_handle() { return {}; }
    static GaloisHandle frobenius(long p);
    static GaloisHandle conjugation();
    static GaloisHandle word(const GaloisHandle& a, const GaloisHandle& b);
    std::string str() const;
};

// Restriction of a Galois element to one generalized eigenspace, in the
// P-hat normalized basis: the line of beta maps to the line of [u^{-1} beta]
// with coefficient coeff[position of beta in the orbit].
struct ActionBlock {
    WordOrbit orbit;
    long u = 1;
    std::vector<CycloNumber> coeff;

    const CycloNumber& coeff_of(const GammaWord& beta) const { return coeff[orbit.index_of(beta)]; }
    // Basis change to the hyperelliptic omega basis.
    CycloNumber omega_coeff_of(const GammaWord& beta) const;
    bool is_identity() const;
};

struct RhoMatrix {
    long m = 1;
    GaloisHandle handle;
    long u = 1;
    std::vector<ActionBlock> blocks;  // sorted by orbit canonical member

    const ActionBlock& block_for(const GammaWord& beta) const;
    bool is_identity() const;
};

// Index permutation j -> [u^{-1} j] on {1..m-1} (0-based vector of 1-based images).
std::vector<long> shape_of(long u, long m);

// Thrown when the recognition ladder fails on a conjugation-route
// coefficient; Frobenius-route failures are hard logic errors instead.
struct UnresolvedBlock : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Frobenius action on one orbit, computed purely p-adically:
// coefficient on the map [line of beta] -> [line of p beta] is
// iota^{-1}((-1)^{<beta>} Gamma_p-hat(p beta)^{-1}), recognized in Q(zeta_m).
ActionBlock rho_frobenius_block(long p, const WordOrbit& orbit, long k);

// Complex conjugation: coefficient conj(P-hat(beta)) / P-hat(-beta),
// recognized through the conductor ladder.
ActionBlock rho_conjugation_block(const WordOrbit& orbit, mpfr_prec_t prec);

// Cross-route Frobenius block via complex-recognized Gamma-hat values and
// sigma_{p^{-1}}; used to validate the p-adic route at split primes.
ActionBlock complex_frobenius_block(long p, const WordOrbit& orbit, mpfr_prec_t prec);

ActionBlock identity_block(const WordOrbit& orbit);

ActionBlock compose(const ActionBlock& a, const ActionBlock& b);  // a after b

RhoMatrix rho_identity(long m, const std::vector<WordOrbit>& orbits);
RhoMatrix rho_frobenius(long m, long p, const std::vector<WordOrbit>& orbits, long k);
RhoMatrix rho_conjugation(long m, const std::vector<WordOrbit>& orbits, mpfr_prec_t prec);
RhoMatrix compose(const RhoMatrix& a, const RhoMatrix& b);

bool rho_equal(const RhoMatrix& a, const RhoMatrix& b);
// Smallest n >= 1 with rho^n = identity; throws past the bound.
long rho_order(const RhoMatrix& rho, long bound);

// Memoized ladder recognition of Gamma-hat(word); nullopt when unresolved.
std::optional<CycloNumber> recognize_gamma_hat(const GammaWord& word, mpfr_prec_t prec);

}  // namespace fermatst
