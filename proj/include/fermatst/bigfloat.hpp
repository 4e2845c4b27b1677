#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace fermatst {

// RAII wrapper over mpfr_t.  Every value carries its precision; binary
// operations compute at the larger of the two operand precisions.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_long(long x, mpfr_prec_t prec);
    static BigFloat from_mpq(const mpq_class& q, mpfr_prec_t prec);
    static BigFloat from_mpz(const mpz_class& z, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;
    BigFloat operator-() const;

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }

    BigFloat abs() const;
    BigFloat sqrt() const;
    // *this * 2^e
    BigFloat mul_2exp(long e) const;
    // Nearest integer.
    mpz_class round() const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(size_t digits = 40) const;

  private:
    mpfr_t v_;
};

BigFloat gamma_rational(const mpq_class& x, mpfr_prec_t prec);
BigFloat sin_pi_times(const mpq_class& x, mpfr_prec_t prec);   // sin(pi x)
BigFloat cos_pi_times(const mpq_class& x, mpfr_prec_t prec);   // cos(pi x)

struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex from_real(const BigFloat& r);
    static BigComplex from_mpq(const mpq_class& q, mpfr_prec_t prec);
    // exp(2 pi i k / M)
    static BigComplex root_of_unity(long k, long M, mpfr_prec_t prec);
    // (2 pi i)^e for integer e (possibly negative)
    static BigComplex two_pi_i_pow(long e, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    BigComplex operator+(const BigComplex& o) const;
    BigComplex operator-(const BigComplex& o) const;
    BigComplex operator*(const BigComplex& o) const;
    BigComplex operator/(const BigComplex& o) const;
    BigComplex operator-() const;

    BigComplex conj() const;
    BigComplex inverse() const;
    BigFloat norm2() const;  // |z|^2
    BigFloat abs() const;
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex pow_long(long e) const;

    std::string str(size_t digits = 40) const;
};

// |a - b| <= 2^{-bits} * max(1, |a|)
bool close_abs_rel(const BigComplex& a, const BigComplex& b, long bits);

}  // namespace fermatst
