#pragma once

#include <string>
#include <vector>

#include "fermatst/characters.hpp"
#include "fermatst/cyclotomic.hpp"
#include "fermatst/padic.hpp"

namespace fermatst {

enum class GKVerdict { verified, failed, unresolved };

struct GKReport {
    long m = 0;
    GammaWord alpha;
    long p = 0;
    long k = 0;
    long prec = 0;
    GKVerdict verdict = GKVerdict::unresolved;
    // lhs = Gamma-hat(-alpha) / Frob_p(Gamma-hat(-p alpha)) when recognized
    bool lhs_known = false;
    CycloNumber lhs;
    PadicInt rhs;  // Gamma_p-hat(p alpha) / (-1)^{<alpha>}
    std::string diagnostics;

    std::string verdict_str() const;
};

// Numerical check of the generalized Gross-Koblitz identity for one
// character and one odd prime p not dividing m, exact modulo p^k.
GKReport gk_verify(const GammaWord& alpha, long p, long k, mpfr_prec_t prec);

// All minimal-degree-generator characters plus the antidiagonal pairs
// {i, m-i}, for all odd primes p < p_bound with p not dividing m.
std::vector<GKReport> gk_sweep(long m, long p_bound, long k, mpfr_prec_t prec, int threads = 1);

std::vector<GammaWord> gk_character_source(long m);

}  // namespace fermatst
