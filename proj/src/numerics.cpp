#include "fermatst/numerics.hpp"

#include <stdexcept>

#include "fermatst/modarith.hpp"

namespace fermatst {

namespace {

// Guard policy: 64 extra bits plus the bit length of the word size.
mpfr_prec_t working_prec(mpfr_prec_t prec, long q) {
    long bits = 1;
    while ((1L << bits) < std::max(q, 2L)) ++bits;
    return prec + 64 + bits;
}

}  // namespace

mpq_class mu(long m, long i) {
    if (i < 1 || i > m - 1) throw std::invalid_argument("mu: index out of range");
    mpq_class r(m - 2 * i, m);
    r.canonicalize();
    return r;
}

mpq_class mu_word(const GammaWord& beta) {
    mpq_class r = 1;
    for (long i : beta.idx) r *= mu(beta.m, i);
    return r;
}

PeriodValue period_P(const GammaWord& beta, mpfr_prec_t prec) {
    const long q = beta.q();
    if (q % 2 != 0) throw std::invalid_argument("period_P: odd length");
    mpfr_prec_t wp = working_prec(prec, q);
    BigComplex acc = BigComplex::two_pi_i_pow(-q / 2, wp);
    for (long i : beta.idx) {
        BigFloat g1 = gamma_rational(mpq_class(i, beta.m), wp);
        BigFloat g2 = gamma_rational(mpq_class(2 * i, beta.m), wp);  // not reduced mod 1
        acc = acc * BigComplex::from_real(g1 * g1 / g2);
    }
    if (acc.is_zero()) throw std::logic_error("period_P: vanishing period");
    return PeriodValue{beta, acc, PeriodNorm::P, prec};
}

PeriodValue gamma_hat(long u, const GammaWord& beta, mpfr_prec_t prec) {
    const long q = beta.q();
    const long m = beta.m;
    if (q % 2 != 0) throw std::invalid_argument("gamma_hat: odd length");
    if (!is_unit_mod(u, m)) throw std::invalid_argument("gamma_hat: u is not a unit");
    mpfr_prec_t wp = working_prec(prec, q);
    BigComplex acc = BigComplex::two_pi_i_pow(-q / 2, wp);
    for (long i : beta.idx) {
        long a = mod_hi(u * i, m);
        long b = mod_hi(2 * u * i, m);
        BigFloat g1 = gamma_rational(mpq_class(a, m), wp);
        BigFloat g2 = gamma_rational(mpq_class(b, m), wp);
        acc = acc * BigComplex::from_real(g1 * g1 / g2);
    }
    if (acc.is_zero()) throw std::logic_error("gamma_hat: vanishing value");
    return PeriodValue{beta.unit_multiple(u), acc, PeriodNorm::Phat, prec};
}

mpq_class period_ratio_r(const GammaWord& beta) {
    mpq_class r = 1;
    for (long i : beta.idx)
        if (2 * i > beta.m) r /= -mu(beta.m, i);
    return r;
}

mpq_class basis_scale_E(const GammaWord& beta) {
    return mu_word(beta) * period_ratio_r(beta.negated());
}

BigComplex gamma_of_equation(const ExponentVector& f, mpfr_prec_t prec) {
    const long m = f.m;
    mpfr_prec_t wp = working_prec(prec, std::max(2L, f.positive_degree()));
    BigComplex acc = BigComplex::from_mpq(1, wp);
    for (long j = 1; j < m; ++j) {
        long ej = f.e[j - 1];
        if (ej == 0) continue;
        BigFloat g1 = gamma_rational(mpq_class(j, m), wp);
        BigFloat g2 = gamma_rational(mpq_class(mod_hi(-2 * j, m), m), wp);
        BigComplex factor = BigComplex::from_real(g1 * g1 * g2);
        acc = acc * factor.pow_long(ej);
    }
    return acc;
}

mpq_class cup_product(long m, long i, long j) {
    if (i < 1 || i > m - 1 || j < 1 || j > m - 1)
        throw std::invalid_argument("cup_product: index out of range");
    if (j != m - i) return 0;
    mpq_class r(m, m - 2 * i);
    r.canonicalize();
    return r;
}

std::vector<std::vector<mpq_class>> polarization_matrix(long m) {
    std::vector<std::vector<mpq_class>> M(m - 1, std::vector<mpq_class>(m - 1, mpq_class(0)));
    for (long i = 1; i < m; ++i) {
        mpq_class v = mpq_class(-1, 4) * cup_product(m, i, m - i);
        v.canonicalize();
        M[i - 1][m - i - 1] = v;
    }
    return M;
}

}  // namespace fermatst
