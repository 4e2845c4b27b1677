#include "fermatst/bigfloat.hpp"

#include <stdexcept>

namespace fermatst {

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat BigFloat::from_long(long x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_mpq(const mpq_class& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_mpz(const mpz_class& z, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

#define FST_BINOP(op, fn)                                               \
    BigFloat BigFloat::operator op(const BigFloat& o) const {           \
        BigFloat r(std::max(prec(), o.prec()));                         \
        fn(r.raw(), v_, o.v_, MPFR_RNDN);                               \
        return r;                                                       \
    }
FST_BINOP(+, mpfr_add)
FST_BINOP(-, mpfr_sub)
FST_BINOP(*, mpfr_mul)
FST_BINOP(/, mpfr_div)
#undef FST_BINOP

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.raw(), v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec());
    mpfr_abs(r.raw(), v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.raw(), v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::mul_2exp(long e) const {
    BigFloat r(prec());
    mpfr_mul_2si(r.raw(), v_, e, MPFR_RNDN);
    return r;
}

mpz_class BigFloat::round() const {
    mpfr_t t;
    mpfr_init2(t, prec());
    mpfr_rint(t, v_, MPFR_RNDN);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

std::string BigFloat::str(size_t digits) const {
    char fmt[32];
    snprintf(fmt, sizeof fmt, "%%.%zuRg", digits);
    char* s = nullptr;
    mpfr_asprintf(&s, fmt, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigFloat gamma_rational(const mpq_class& x, mpfr_prec_t prec) {
    if (x <= 0) throw std::invalid_argument("gamma_rational: argument must be positive");
    mpfr_prec_t wp = prec + 32;
    BigFloat t = BigFloat::from_mpq(x, wp);
    BigFloat r(wp);
    mpfr_gamma(r.raw(), t.raw(), MPFR_RNDN);
    return r;
}

BigFloat sin_pi_times(const mpq_class& x, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    BigFloat px = BigFloat::pi(wp) * BigFloat::from_mpq(x, wp);
    BigFloat r(wp);
    mpfr_sin(r.raw(), px.raw(), MPFR_RNDN);
    return r;
}

BigFloat cos_pi_times(const mpq_class& x, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    BigFloat px = BigFloat::pi(wp) * BigFloat::from_mpq(x, wp);
    BigFloat r(wp);
    mpfr_cos(r.raw(), px.raw(), MPFR_RNDN);
    return r;
}

BigComplex BigComplex::from_real(const BigFloat& r) {
    BigComplex z(r.prec());
    z.re = r;
    return z;
}

BigComplex BigComplex::from_mpq(const mpq_class& q, mpfr_prec_t prec) {
    return from_real(BigFloat::from_mpq(q, prec));
}

BigComplex BigComplex::root_of_unity(long k, long M, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    BigFloat two_pi = BigFloat::pi(wp).mul_2exp(1);
    BigFloat angle = two_pi * BigFloat::from_mpq(mpq_class(k, M), wp);
    BigComplex z(wp);
    mpfr_sin_cos(z.im.raw(), z.re.raw(), angle.raw(), MPFR_RNDN);
    return z;
}

BigComplex BigComplex::two_pi_i_pow(long e, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    BigFloat two_pi = BigFloat::pi(wp).mul_2exp(1);
    BigFloat mag(wp);
    mpfr_pow_si(mag.raw(), two_pi.raw(), e, MPFR_RNDN);
    // i^e cycles with period 4
    long r = ((e % 4) + 4) % 4;
    BigComplex z(wp);
    switch (r) {
        case 0: z.re = mag; break;
        case 1: z.im = mag; break;
        case 2: z.re = -mag; break;
        case 3: z.im = -mag; break;
    }
    return z;
}

BigComplex BigComplex::operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
BigComplex BigComplex::operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }

BigComplex BigComplex::operator*(const BigComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
}

BigComplex BigComplex::operator/(const BigComplex& o) const { return *this * o.inverse(); }

BigComplex BigComplex::operator-() const { return {-re, -im}; }

BigComplex BigComplex::conj() const { return {re, -im}; }

BigFloat BigComplex::norm2() const { return re * re + im * im; }

BigFloat BigComplex::abs() const { return norm2().sqrt(); }

BigComplex BigComplex::inverse() const {
    BigFloat n = norm2();
    if (n.is_zero()) throw std::domain_error("BigComplex::inverse: zero");
    return {re / n, -im / n};
}

BigComplex BigComplex::pow_long(long e) const {
    if (e < 0) return inverse().pow_long(-e);
    BigComplex acc = from_mpq(1, prec());
    BigComplex base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string BigComplex::str(size_t digits) const {
    return re.str(digits) + (im.sign() < 0 ? " - " : " + ") + im.abs().str(digits) + "*i";
}

bool close_abs_rel(const BigComplex& a, const BigComplex& b, long bits) {
    BigFloat diff = (a - b).abs();
    BigFloat scale = a.abs();
    BigFloat one = BigFloat::from_long(1, scale.prec());
    if (scale.cmp(one) < 0) scale = one;
    return diff.cmp(scale.mul_2exp(-bits)) <= 0;
}

}  // namespace fermatst
