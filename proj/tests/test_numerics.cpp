#include <doctest.h>

#include <random>

#include "fermatst/numerics.hpp"

using namespace fermatst;

namespace {
const mpfr_prec_t P = 256;

bool near(const BigFloat& a, const BigFloat& b, long bits) {
    BigFloat diff = (a - b).abs();
    BigFloat scale = a.abs();
    BigFloat one = BigFloat::from_long(1, P);
    if (scale.cmp(one) < 0) scale = one;
    return diff.cmp(scale.mul_2exp(-bits)) <= 0;
}
}  // namespace

TEST_CASE("gamma at classical points") {
    BigFloat g_half = gamma_rational(mpq_class(1, 2), P);
    BigFloat sqrt_pi = BigFloat::pi(P).sqrt();
    CHECK(near(g_half, sqrt_pi, P - 8));

    BigFloat g43 = gamma_rational(mpq_class(4, 3), P);
    BigFloat g13 = gamma_rational(mpq_class(1, 3), P);
    CHECK(near(g43, g13 / BigFloat::from_long(3, P), P - 8));

    BigFloat refl = gamma_rational(mpq_class(1, 3), P) * gamma_rational(mpq_class(2, 3), P);
    BigFloat expect = BigFloat::pi(P).mul_2exp(1) / BigFloat::from_long(3, P).sqrt();
    CHECK(near(refl, expect, P - 8));

    CHECK_THROWS_AS(gamma_rational(mpq_class(-1, 2), P), std::invalid_argument);
}

TEST_CASE("reflection and duplication self-checks at random rationals") {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 25; ++iter) {
        long den = 3 + (long)(rng() % 60);
        long num = 1 + (long)(rng() % (den - 1));
        mpq_class x(num, den);
        x.canonicalize();
        // Gamma(x) Gamma(1-x) sin(pi x) / pi = 1
        BigFloat lhs = gamma_rational(x, P) * gamma_rational(1 - x, P) * sin_pi_times(x, P) / BigFloat::pi(P);
        CHECK(near(lhs, BigFloat::from_long(1, P), P - 8));
        // Legendre duplication
        BigFloat dup = gamma_rational(x, P) * gamma_rational(x + mpq_class(1, 2), P);
        mpq_class e = 1 - 2 * x;
        BigFloat two_pow(P);
        mpfr_ui_pow(two_pow.raw(), 2, BigFloat::from_mpq(e, P).raw(), MPFR_RNDN);
        BigFloat rhs = two_pow * BigFloat::pi(P).sqrt() * gamma_rational(2 * x, P);
        CHECK(near(dup, rhs, P - 8));
    }
}

TEST_CASE("mu values") {
    CHECK(mu(15, 1) == mpq_class(13, 15));
    for (long m : {3L, 5L, 15L})
        for (long i = 1; i < m; ++i) CHECK(mu(m, m - i) == -mu(m, i));
    GammaWord b(15, {1, 2, 4, 8});
    CHECK(mu_word(b.negated()) == mu_word(b));
}

TEST_CASE("period P hand values") {
    // m=3, beta={1,2}: P = -i sqrt(3)
    PeriodValue pv = period_P(GammaWord(3, {1, 2}), P);
    CHECK(near(pv.value.im, -BigFloat::from_long(3, P).sqrt(), P - 10));
    BigFloat re_abs = pv.value.re.abs();
    CHECK(re_abs.cmp(BigFloat::from_long(1, P).mul_2exp(-(P - 16))) <= 0);

    // m=5, beta={1,4}: real or purely imaginary by parity
    PeriodValue pv5 = period_P(GammaWord(5, {1, 4}), P);
    bool real_part_zero = pv5.value.re.abs().cmp(BigFloat::from_long(1, P).mul_2exp(-(P - 16))) <= 0;
    bool imag_part_zero = pv5.value.im.abs().cmp(BigFloat::from_long(1, P).mul_2exp(-(P - 16))) <= 0;
    CHECK((real_part_zero || imag_part_zero));

    CHECK_THROWS_AS(period_P(GammaWord(5, {1, 4, 2}), P), std::invalid_argument);
}

TEST_CASE("gamma_hat hand values and symmetries") {
    // m=3, alpha={1,2}, u=1: -i/sqrt(3)
    PeriodValue gh = gamma_hat(1, GammaWord(3, {1, 2}), P);
    BigFloat expect = BigFloat::from_long(-1, P) / BigFloat::from_long(3, P).sqrt();
    CHECK(near(gh.value.im, expect, P - 10));

    // conjugation symmetry: Gamma-hat(-alpha) = (-1)^{q/2} conj(Gamma-hat(alpha))
    for (long m : {3L, 5L, 15L}) {
        GammaWord alpha(m, {1, m - 1});
        PeriodValue a = gamma_hat(1, alpha, P);
        PeriodValue b = gamma_hat(m - 1, alpha, P);
        long q = alpha.q();
        BigComplex rhs = a.value.conj();
        if ((q / 2) % 2 == 1) rhs = -rhs;
        CHECK(close_abs_rel(b.value, rhs, P - 16));
    }

    // m=15, alpha={9,12,7,2}: finite nonzero
    PeriodValue g15 = gamma_hat(1, GammaWord(15, {9, 12, 7, 2}), P);
    CHECK(!g15.value.is_zero());

    // i^{q/2} Gamma-hat(u alpha) is real
    GammaWord w(15, {9, 12, 7, 2});
    for (long u : {1L, 2L, 4L, 7L}) {
        PeriodValue g = gamma_hat(u, w, P);
        BigComplex rotated = g.value * BigComplex::two_pi_i_pow(0, P);  // copy
        // multiply by i^{q/2}: q=4 -> i^2 = -1: product should be real
        BigComplex val = g.value;
        long r = (w.q() / 2) % 4;
        BigComplex ipow(P);
        switch (r) {
            case 0: ipow = BigComplex::from_mpq(1, P); break;
            case 1: ipow = BigComplex(BigFloat::from_long(0, P), BigFloat::from_long(1, P)); break;
            case 2: ipow = BigComplex::from_mpq(-1, P); break;
            case 3: ipow = BigComplex(BigFloat::from_long(0, P), BigFloat::from_long(-1, P)); break;
        }
        BigComplex prod = val * ipow;
        CHECK(prod.im.abs().cmp(prod.abs().mul_2exp(-(P - 24))) <= 0);
        (void)rotated;
    }
}

TEST_CASE("P equals r_beta times Gamma-hat") {
    for (long m : {3L, 5L, 15L}) {
        for (const GammaWord& beta : {GammaWord(m, {1, m - 1}), GammaWord(m, {1, 1, m - 2, m - 1})}) {
            PeriodValue p = period_P(beta, P);
            PeriodValue g = gamma_hat(1, beta, P);
            mpq_class r = period_ratio_r(beta);
            CHECK(r > 0);
            BigComplex rhs = g.value * BigComplex::from_mpq(r, P);
            CHECK(close_abs_rel(p.value, rhs, P - 16));
        }
    }
}

TEST_CASE("gamma_of_equation") {
    ExponentVector zero(15, std::vector<long>(14, 0));
    BigComplex one = gamma_of_equation(zero, P);
    CHECK(close_abs_rel(one, BigComplex::from_mpq(1, P), P - 16));

    std::vector<long> e(14, 0);
    e[9 - 1] = 1; e[12 - 1] = 1; e[8 - 1] = -1; e[13 - 1] = -1;
    ExponentVector f(15, e);
    std::vector<long> en(14, 0);
    for (int i = 0; i < 14; ++i) en[i] = -e[i];
    ExponentVector fneg(15, en);
    BigComplex a = gamma_of_equation(f, P);
    BigComplex b = gamma_of_equation(fneg, P);
    CHECK(close_abs_rel(a * b, BigComplex::from_mpq(1, P), P - 16));
}

TEST_CASE("cup products and polarization") {
    CHECK(cup_product(15, 1, 14) == mpq_class(15, 13));
    CHECK(cup_product(15, 1, 2) == 0);
    auto M = polarization_matrix(15);
    CHECK(M[0][13] == mpq_class(-15, 52));
    for (long m : {3L, 5L, 7L, 15L, 21L}) {
        auto Pm = polarization_matrix(m);
        for (long i = 1; i < m; ++i)
            for (long j = 1; j < m; ++j) {
                CHECK(Pm[i - 1][j - 1] == -Pm[j - 1][i - 1]);
                if (i + j != m) CHECK(Pm[i - 1][j - 1] == 0);
            }
    }
}
