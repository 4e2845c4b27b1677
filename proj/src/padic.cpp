#include "fermatst/padic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fermatst/modarith.hpp"

namespace fermatst {

mpz_class pow_long(long base, long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)base, (unsigned long)exp);
    return r;
}

namespace {

mpz_class mod_reduce(const mpz_class& x, const mpz_class& mod) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    return r;
}

mpz_class inv_mod_z(const mpz_class& a, const mpz_class& mod) {
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()))
        throw std::domain_error("inv_mod_z: not invertible");
    return r;
}

// residue of a rational with p-coprime denominator
mpz_class rational_mod(const mpq_class& x, const mpz_class& mod) {
    mpz_class num = mod_reduce(x.get_num(), mod);
    return mod_reduce(num * inv_mod_z(x.get_den(), mod), mod);
}

long val_p(const mpz_class& x, long p) {
    if (x == 0) return -1;
    long v = 0;
    mpz_class t = x;
    while (t % p == 0) { t /= p; ++v; }
    return v;
}

}  // namespace

PadicInt::PadicInt(long p_, long k_, const mpz_class& val) : p(p_), k(k_) {
    if (k < 1) throw std::invalid_argument("PadicInt: precision must be >= 1");
    r = mod_reduce(val, modulus());
}

PadicInt PadicInt::from_rational(const mpq_class& x, long p, long k) {
    if (x.get_den() % p == 0) throw std::invalid_argument("PadicInt::from_rational: not a p-adic integer");
    return PadicInt(p, k, rational_mod(x, pow_long(p, k)));
}

namespace {
long common_k(const PadicInt& a, const PadicInt& b) {
    if (a.p != b.p) throw std::invalid_argument("PadicInt: prime mismatch");
    return std::min(a.k, b.k);
}
}  // namespace

PadicInt PadicInt::operator+(const PadicInt& o) const { long kk = common_k(*this, o); return PadicInt(p, kk, r + o.r); }
PadicInt PadicInt::operator-(const PadicInt& o) const { long kk = common_k(*this, o); return PadicInt(p, kk, r - o.r); }
PadicInt PadicInt::operator*(const PadicInt& o) const { long kk = common_k(*this, o); return PadicInt(p, kk, r * o.r); }
PadicInt PadicInt::operator/(const PadicInt& o) const { return *this * o.inverse(); }
PadicInt PadicInt::operator-() const { return PadicInt(p, k, -r); }

PadicInt PadicInt::inverse() const {
    if (!is_unit()) throw std::domain_error("PadicInt::inverse: not a unit");
    return PadicInt(p, k, inv_mod_z(r, modulus()));
}

PadicInt PadicInt::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class out;
    mpz_class mod = modulus();
    mpz_powm_ui(out.get_mpz_t(), r.get_mpz_t(), (unsigned long)e, mod.get_mpz_t());
    return PadicInt(p, k, out);
}

long PadicInt::valuation() const {
    if (r == 0) return k;
    return val_p(r, p);
}

PadicInt PadicInt::truncate(long k2) const {
    if (k2 > k) throw std::invalid_argument("PadicInt::truncate: cannot raise precision");
    return PadicInt(p, k2, r);
}

std::string PadicInt::str() const {
    std::ostringstream os;
    os << r.get_str() << " mod " << p << "^" << k;
    return os.str();
}

const std::vector<mpq_class>& bernoulli_numbers(long n) {
    static std::mutex mtx;
    static std::vector<mpq_class> cache{mpq_class(1)};
    std::lock_guard<std::mutex> lk(mtx);
    while ((long)cache.size() <= n) {
        long m = (long)cache.size();
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        mpq_class s = 0;
        mpz_class binom = 1;  // C(m+1, 0)
        for (long j = 0; j < m; ++j) {
            s += mpq_class(binom) * cache[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        mpq_class bm = -s / binom;  // binom = C(m+1, m) = m+1
        bm.canonicalize();
        cache.push_back(bm);
    }
    return cache;
}

namespace {

// Faulhaber sum F_j(S) = sum_{s=0}^{S-1} s^j evaluated exactly at rational S.
mpq_class faulhaber(long j, const mpq_class& S) {
    const auto& B = bernoulli_numbers(j + 1);
    // (Bernoulli(j+1)(S) - B_{j+1})/(j+1) with B_1 = -1/2 convention
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(j+1, i)
    std::vector<mpq_class> spow(j + 2);
    spow[0] = 1;
    for (long t = 1; t <= j + 1; ++t) spow[t] = spow[t - 1] * S;
    for (long i = 0; i <= j; ++i) {
        acc += mpq_class(binom) * B[i] * spow[j + 1 - i];
        binom = binom * (j + 1 - i) / (i + 1);
    }
    acc /= (j + 1);
    acc.canonicalize();
    return acc;
}

// p-adic logarithm of a principal unit u = 1 mod p (p odd), modulo p^K.
mpz_class log_principal(const mpz_class& u, long p, long K) {
    if ((u - 1) % p != 0) throw std::invalid_argument("log_principal: not a principal unit");
    long J = 1;
    auto log_p_floor = [&](long x) { long l = 0, t = 1; while (t <= x / p) { t *= p; ++l; } return l; };
    while (J - log_p_floor(J) < K) ++J;
    long Vmax = log_p_floor(J) + 1;
    mpz_class modW = pow_long(p, K + Vmax), modK = pow_long(p, K);
    mpz_class w = mod_reduce(u - 1, modW);
    mpz_class wpow = 1, acc = 0;
    for (long j = 1; j <= J; ++j) {
        wpow = mod_reduce(wpow * w, modW);
        long v = val_p(mpz_class(j), p);
        mpz_class unit = mpz_class(j) / pow_long(p, v);
        mpz_class term = mod_reduce(wpow * inv_mod_z(unit, modW), modW);
        mpz_class pv = pow_long(p, v);
        if (term % pv != 0) throw std::logic_error("log_principal: unexpected valuation");
        term /= pv;
        acc += (j % 2 == 1) ? term : -term;
    }
    return mod_reduce(acc, modK);
}

// p-adic exponential of v with v = 0 mod p (p odd), modulo p^K.
mpz_class exp_padic(const mpz_class& v, long p, long K) {
    if (v % p != 0) throw std::invalid_argument("exp_padic: argument must be divisible by p");
    long J = 1;
    while (J + 1 - J / (p - 1) < K + 1) ++J;
    // working precision must absorb v_p(J!)
    long vfac = 0;
    {
        long t = p;
        while (t <= J) { vfac += J / t; if (t > J / p) break; t *= p; }
    }
    mpz_class modW = pow_long(p, K + vfac), modK = pow_long(p, K);
    mpz_class vr = mod_reduce(v, modW);
    mpz_class vpow = 1, ufac = 1, acc = 1;
    long efac = 0;
    for (long j = 1; j <= J; ++j) {
        vpow = mod_reduce(vpow * vr, modW);
        long vj = val_p(mpz_class(j), p);
        efac += vj;
        ufac = mod_reduce(ufac * (mpz_class(j) / pow_long(p, vj)), modW);
        mpz_class term = mod_reduce(vpow * inv_mod_z(ufac, modW), modW);
        mpz_class pe = pow_long(p, efac);
        if (term % pe != 0) throw std::logic_error("exp_padic: unexpected valuation");
        term /= pe;
        acc += term;
    }
    return mod_reduce(acc, modK);
}

// Teichmueller lift of c (a unit) modulo p^K.
mpz_class teichmuller(long c, long p, long K) {
    mpz_class mod = pow_long(p, K);
    mpz_class t = mod_reduce(mpz_class(c), mod);
    for (long i = 0; i <= K; ++i) {
        mpz_class nt;
        mpz_powm_ui(nt.get_mpz_t(), t.get_mpz_t(), (unsigned long)p, mod.get_mpz_t());
        if (nt == t) break;
        t = nt;
    }
    return t;
}

struct GammaSeriesCtx {
    long p, K;
    mpz_class modK;
    std::vector<mpz_class> Q;  // Q[j] = sum_c c^{-j} mod p^K, j = 1..J
    mpz_class L1;              // sum_c log <c> mod p^K
};

std::mutex g_ctx_mutex;
std::map<std::pair<long, long>, GammaSeriesCtx> g_ctx_cache;

const GammaSeriesCtx& gamma_ctx(long p, long K, long Jmax) {
    std::lock_guard<std::mutex> lk(g_ctx_mutex);
    auto key = std::make_pair(p, K);
    auto it = g_ctx_cache.find(key);
    if (it != g_ctx_cache.end() && (long)it->second.Q.size() > Jmax) return it->second;
    GammaSeriesCtx ctx;
    ctx.p = p;
    ctx.K = K;
    ctx.modK = pow_long(p, K);
    ctx.Q.assign(Jmax + 1, mpz_class(0));
    ctx.L1 = 0;
    for (long c = 1; c < p; ++c) {
        mpz_class cinv = inv_mod_z(mpz_class(c), ctx.modK);
        mpz_class pw = 1;
        for (long j = 1; j <= Jmax; ++j) {
            pw = mod_reduce(pw * cinv, ctx.modK);
            ctx.Q[j] = mod_reduce(ctx.Q[j] + pw, ctx.modK);
        }
        mpz_class omega = teichmuller(c, p, K);
        mpz_class u = mod_reduce(mpz_class(c) * inv_mod_z(omega, ctx.modK), ctx.modK);
        ctx.L1 = mod_reduce(ctx.L1 + log_principal(u, p, K), ctx.modK);
    }
    return g_ctx_cache[key] = std::move(ctx);
}

PadicInt morita_gamma_series(long p, const mpq_class& x, long k) {
    const long Klam = k + 4;
    auto log_p_floor = [&](long t) { long l = 0, w = 1; while (w <= t / p) { w *= p; ++l; } return l; };
    long J = 1;
    while (J + 1 - log_p_floor(J + 1) < Klam) ++J;
    const GammaSeriesCtx& ctx = gamma_ctx(p, Klam, J);
    const mpz_class& modK = ctx.modK;

    // shift to the residue disc of 0: x = z + r with z in pZ_p
    long r0 = (long)rational_mod(x, mpz_class(p)).get_si();
    mpq_class z = x - r0;
    mpq_class S = z / p;
    if (S.get_den() % p == 0) throw std::logic_error("morita_gamma: shift not divisible by p");

    // Lambda(z) = S L1 + sum_j (-1)^{j+1} p^j/j F_j(S) Q_j
    mpz_class lam = mod_reduce(rational_mod(S, modK) * ctx.L1, modK);
    for (long j = 1; j <= J; ++j) {
        long vj = val_p(mpz_class(j), p);
        if (j - vj >= Klam) continue;
        mpz_class unit = mpz_class(j) / pow_long(p, vj);
        mpz_class a = rational_mod(faulhaber(j, S), modK);
        a = mod_reduce(a * ctx.Q[j], modK);
        a = mod_reduce(a * inv_mod_z(unit, modK), modK);
        a = mod_reduce(a * pow_long(p, j - vj), modK);
        lam = mod_reduce(lam + ((j % 2 == 1) ? a : -a), modK);
    }

    mpz_class G = exp_padic(lam, p, k + 2);
    mpz_class mod2 = pow_long(p, k + 2);
    mpz_class prod = 1;
    for (long s = 1; s < r0; ++s) prod = mod_reduce(prod * rational_mod(z + s, mod2), mod2);
    mpz_class res = mod_reduce(G * prod, mod2);
    if (r0 % 2 == 1) res = -res;
    return PadicInt(p, k, res);
}

}  // namespace

PadicInt morita_gamma_direct(long p, const mpq_class& x, long k) {
    if (x.get_den() % p == 0) throw std::invalid_argument("morita_gamma: argument not a p-adic integer");
    const long delta = 2;
    mpz_class modG = pow_long(p, k + delta);
    if (mpz_sizeinbase(modG.get_mpz_t(), 2) > 30)
        throw std::invalid_argument("morita_gamma_direct: p^{k+2} too large for the defining product");
    long n = (long)rational_mod(x, modG).get_si();
    if (n == 0) n = (long)modG.get_si();
    long modl = (long)modG.get_si();
    // (-1)^n prod_{0<i<n, p !| i} i  mod p^{k+delta}
    unsigned long long acc = 1;
    long mm = modl;
    for (long i = 1; i < n; ++i) {
        if (i % p == 0) continue;
        acc = (unsigned long long)((__int128)acc * (unsigned long long)(i % mm) % (unsigned long long)mm);
    }
    mpz_class res((long)acc);
    if (n % 2 == 1) res = -res;
    return PadicInt(p, k, res);
}

PadicInt morita_gamma(long p, const mpq_class& x, long k) {
    if (!is_prime_long(p)) throw std::invalid_argument("morita_gamma: p must be prime");
    if (x.get_den() % p == 0) throw std::invalid_argument("morita_gamma: argument not a p-adic integer");
    if (p == 2) return morita_gamma_direct(p, x, k);
    return morita_gamma_series(p, x, k);
}

PadicInt gamma_hat_p(long u, const GammaWord& alpha, long p, long k) {
    const long m = alpha.m;
    if (m % p == 0) throw std::invalid_argument("gamma_hat_p: p divides m");
    if (!is_unit_mod(u, m)) throw std::invalid_argument("gamma_hat_p: u not a unit");
    PadicInt acc = PadicInt::from_rational(1, p, k);
    for (long i : alpha.idx) {
        long a = mod_hi(u * i, m);
        long b = mod_hi(2 * u * i, m);
        PadicInt g1 = morita_gamma(p, mpq_class(a, m), k);
        PadicInt g2 = morita_gamma(p, mpq_class(b, m), k);
        acc = acc * g1 * g1 / g2;
    }
    if (!acc.is_unit()) throw std::logic_error("gamma_hat_p: value not a unit");
    return acc;
}

}  // namespace fermatst
