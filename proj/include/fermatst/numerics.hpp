#pragma once

#include "fermatst/bigfloat.hpp"
#include "fermatst/characters.hpp"
#include "fermatst/lattice.hpp"

namespace fermatst {

enum class PeriodNorm { P, Phat };

struct PeriodValue {
    GammaWord beta;
    BigComplex value;
    PeriodNorm norm = PeriodNorm::P;
    mpfr_prec_t prec = 0;
};

// mu_i = (m - 2i)/m; mu of a word is the product over its indices.
mpq_class mu(long m, long i);
mpq_class mu_word(const GammaWord& beta);

// P(gamma, omega_beta) = (2 pi i)^{-q/2} prod Gamma(i_r/m)^2 Gamma(2 i_r/m)^{-1},
// the second argument not reduced mod 1.
PeriodValue period_P(const GammaWord& beta, mpfr_prec_t prec);

// Gamma-hat(u beta) = (2 pi i)^{-q/2} prod Gamma([u i_r]/m)^2 / Gamma([2 u i_r]/m),
// representatives in [1, m].  Equals the P-hat normalization.
PeriodValue gamma_hat(long u, const GammaWord& beta, mpfr_prec_t prec);

// Positive rational r_beta with P(beta) = r_beta * Gamma-hat(beta):
// r_beta = prod over indices i_r > m/2 of (-mu_{i_r})^{-1}.
mpq_class period_ratio_r(const GammaWord& beta);

// The de Rham basis rescaling nu_beta = E_beta * omega_beta that makes the
// Galois-action coefficients plain Gamma-hat ratios: E_beta = mu_beta * r_{-beta}.
mpq_class basis_scale_E(const GammaWord& beta);

// Gamma(f) = prod_j [Gamma(j/m)^2 Gamma([-2j]/m)]^{e_j}, [-2j] in [1, m].
BigComplex gamma_of_equation(const ExponentVector& f, mpfr_prec_t prec);

// omega_i cup omega_j: m/(m-2i) when j = m-i, else 0.
mpq_class cup_product(long m, long i, long j);

// Antidiagonal matrix with entry -(1/4) m/(m-2i) at (i, m-i); 1-based
// indices, returned dense (m-1) x (m-1).
std::vector<std::vector<mpq_class>> polarization_matrix(long m);

}  // namespace fermatst
