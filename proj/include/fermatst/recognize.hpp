#pragma once

#include "fermatst/bigfloat.hpp"
#include "fermatst/cyclotomic.hpp"

namespace fermatst {

struct RecognitionResult {
    CycloNumber value;
    BigFloat residual;
    bool verified = false;
    std::string diagnostics;
};

// Find a rational-coefficient element of Q(zeta_M) matching z, by integer
// relation detection on the complex embedding.  Requires
//   prec >= 2 (phi(M)+1) log2(height_bound) + 64,
// otherwise throws.  Verification re-embeds at doubled precision and asks
// for residual <= 2^{-prec/2} * max(1, |z|).
RecognitionResult recognize(const BigComplex& z, long M, const mpz_class& height_bound, mpfr_prec_t prec);

// Tries conductors m, lcm(m,4), lcm(m,8), lcm(m,24), then doublings, until
// verified or the precision precondition fails.
RecognitionResult recognition_ladder(const BigComplex& z, long m, mpfr_prec_t prec,
                                     const mpz_class& height_bound = mpz_class(1000000));

}  // namespace fermatst
