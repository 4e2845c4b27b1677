#include "fermatst/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fermatst/modarith.hpp"

namespace fermatst {

namespace {

std::mutex g_cyclo_mutex;
std::map<long, std::vector<mpz_class>> g_phi_cache;
// zeta_M^t reduced mod Phi_M for t = 0..M-1 (integer coefficients).
std::map<long, std::vector<std::vector<mpz_class>>> g_power_cache;

// Exact division of integer polynomials, num = q * den.
std::vector<mpz_class> poly_divexact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    if (den.empty() || den.back() == 0) throw std::logic_error("poly_divexact: bad divisor");
    std::vector<mpz_class> q(num.size() - den.size() + 1, mpz_class(0));
    for (long i = (long)q.size() - 1; i >= 0; --i) {
        mpz_class lead = num[i + den.size() - 1];
        if (lead % den.back() != 0) throw std::logic_error("poly_divexact: not exact");
        mpz_class f = lead / den.back();
        q[i] = f;
        if (f != 0)
            for (size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
    }
    for (const auto& r : num)
        if (r != 0) throw std::logic_error("poly_divexact: nonzero remainder");
    return q;
}

const std::vector<mpz_class>& cyclotomic_locked(long M) {
    auto it = g_phi_cache.find(M);
    if (it != g_phi_cache.end()) return it->second;
    // x^M - 1 divided by the product of Phi_d over proper divisors d
    std::vector<mpz_class> num(M + 1, mpz_class(0));
    num[0] = -1;
    num[M] = 1;
    for (long d = 1; d < M; ++d) {
        if (M % d != 0) continue;
        num = poly_divexact(std::move(num), cyclotomic_locked(d));
    }
    return g_phi_cache.emplace(M, std::move(num)).first->second;
}

const std::vector<std::vector<mpz_class>>& power_table(long M) {
    std::lock_guard<std::mutex> lk(g_cyclo_mutex);
    auto it = g_power_cache.find(M);
    if (it != g_power_cache.end()) return it->second;
    const auto& phi = cyclotomic_locked(M);
    long deg = (long)phi.size() - 1;
    std::vector<std::vector<mpz_class>> tab(M, std::vector<mpz_class>(deg, mpz_class(0)));
    tab[0][0] = 1;
    for (long t = 1; t < M; ++t) {
        // multiply previous row by x, reduce by the monic Phi_M
        std::vector<mpz_class>& cur = tab[t];
        const std::vector<mpz_class>& prev = tab[t - 1];
        mpz_class carry = prev[deg - 1];
        for (long i = deg - 1; i >= 1; --i) cur[i] = prev[i - 1];
        cur[0] = 0;
        if (carry != 0)
            for (long i = 0; i < deg; ++i) cur[i] -= carry * phi[i];
    }
    return g_power_cache.emplace(M, std::move(tab)).first->second;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long M) {
    if (M < 1) throw std::invalid_argument("cyclotomic_polynomial: M >= 1");
    std::lock_guard<std::mutex> lk(g_cyclo_mutex);
    return cyclotomic_locked(M);
}

CycloNumber::CycloNumber(long M_) : M(M_) {
    if (M < 1) throw std::invalid_argument("CycloNumber: conductor >= 1");
    c.assign(euler_phi(M), mpq_class(0));
}

CycloNumber::CycloNumber(long M_, std::vector<mpq_class> coeffs) : M(M_), c(std::move(coeffs)) {
    if ((long)c.size() != euler_phi(M)) throw std::invalid_argument("CycloNumber: wrong coefficient count");
    for (auto& x : c) x.canonicalize();
}

CycloNumber CycloNumber::from_rational(const mpq_class& q, long M) {
    CycloNumber x(M);
    x.c[0] = q;
    x.c[0].canonicalize();
    return x;
}

CycloNumber CycloNumber::zeta(long M, long power) {
    CycloNumber x(M);
    const auto& tab = power_table(M);
    long t = mod_lo(power, M);
    for (long i = 0; i < x.degree(); ++i) x.c[i] = tab[t][i];
    return x;
}

bool CycloNumber::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

mpq_class CycloNumber::rational_part() const {
    if (!is_rational()) throw std::domain_error("CycloNumber::rational_part: not rational");
    return c[0];
}

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

std::pair<CycloNumber, CycloNumber> to_common(const CycloNumber& a, const CycloNumber& b) {
    if (a.M == b.M) return {a, b};
    long M = lcm_long(a.M, b.M);
    return {a.lift_to(M), b.lift_to(M)};
}

}  // namespace

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    auto [a, b] = to_common(*this, o);
    for (long i = 0; i < a.degree(); ++i) a.c[i] += b.c[i];
    return a;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
    auto [a, b] = to_common(*this, o);
    for (long i = 0; i < a.degree(); ++i) a.c[i] -= b.c[i];
    return a;
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    auto [a, b] = to_common(*this, o);
    long deg = a.degree();
    std::vector<mpq_class> prod(2 * deg - 1, mpq_class(0));
    for (long i = 0; i < deg; ++i) {
        if (a.c[i] == 0) continue;
        for (long j = 0; j < deg; ++j) {
            if (b.c[j] == 0) continue;
            prod[i + j] += a.c[i] * b.c[j];
        }
    }
    // reduce mod Phi_M (monic)
    const auto& phi = cyclotomic_polynomial(a.M);
    for (long i = (long)prod.size() - 1; i >= deg; --i) {
        if (prod[i] == 0) continue;
        mpq_class f = prod[i];
        for (long j = 0; j <= deg; ++j) prod[i - deg + j] -= f * phi[j];
    }
    prod.resize(deg);
    return CycloNumber(a.M, std::move(prod));
}

namespace {

using QPoly = std::vector<mpq_class>;  // coefficient i of x^i, no trailing zeros

void qpoly_norm(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// rem = a mod b, q = a div b (b nonzero)
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
    QPoly rem = a, q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        mpq_class f = rem.back() / b.back();
        size_t shift = rem.size() - b.size();
        q[shift] = f;
        for (size_t j = 0; j < b.size(); ++j) rem[shift + j] -= f * b[j];
        qpoly_norm(rem);
    }
    return {q, rem};
}

QPoly qpoly_sub_mul(const QPoly& s0, const QPoly& q, const QPoly& s1) {
    QPoly r(std::max(s0.size(), q.empty() || s1.empty() ? size_t(0) : q.size() + s1.size() - 1), mpq_class(0));
    for (size_t i = 0; i < s0.size(); ++i) r[i] += s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < s1.size(); ++j) r[i + j] -= q[i] * s1[j];
    }
    qpoly_norm(r);
    return r;
}

}  // namespace

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CycloNumber::inverse: zero");
    const auto& phi_z = cyclotomic_polynomial(M);
    QPoly r0(phi_z.begin(), phi_z.end());
    QPoly r1(c.begin(), c.end());
    qpoly_norm(r1);
    QPoly s0{}, s1{mpq_class(1)};  // Bezout coefficients on *this
    while (r1.size() > 1) {
        auto [q, rem] = qpoly_divmod(r0, r1);
        QPoly snew = qpoly_sub_mul(s0, q, s1);
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(snew);
        if (r1.empty()) throw std::logic_error("CycloNumber::inverse: common factor with Phi_M");
    }
    // r1 is a nonzero constant: s1 * this == r1 mod Phi_M
    std::vector<mpq_class> inv(euler_phi(M), mpq_class(0));
    if (s1.size() > inv.size()) throw std::logic_error("CycloNumber::inverse: degree overflow");
    for (size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / r1[0];
    return CycloNumber(M, std::move(inv));
}

CycloNumber CycloNumber::operator/(const CycloNumber& o) const {
    auto [a, b] = to_common(*this, o);
    return a * b.inverse();
}

CycloNumber CycloNumber::pow_long(long e) const {
    if (e < 0) return inverse().pow_long(-e);
    CycloNumber acc = from_rational(1, M);
    CycloNumber base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool CycloNumber::operator==(const CycloNumber& o) const {
    auto [a, b] = to_common(*this, o);
    for (long i = 0; i < a.degree(); ++i)
        if (a.c[i] != b.c[i]) return false;
    return true;
}

CycloNumber CycloNumber::lift_to(long M2) const {
    if (M2 == M) return *this;
    if (M2 % M != 0) throw std::invalid_argument("CycloNumber::lift_to: conductor must be a multiple");
    CycloNumber r(M2);
    long step = M2 / M;
    const auto& tab = power_table(M2);
    for (long i = 0; i < degree(); ++i) {
        if (c[i] == 0) continue;
        const auto& row = tab[mod_lo(i * step, M2)];
        for (long j = 0; j < r.degree(); ++j) r.c[j] += c[i] * row[j];
    }
    return r;
}

std::optional<CycloNumber> CycloNumber::restrict_to(long M2) const {
    if (M2 == M) return *this;
    if (M % M2 != 0) throw std::invalid_argument("CycloNumber::restrict_to: not a divisor");
    long phi2 = euler_phi(M2), phi1 = degree();
    // solve sum_i a_i zeta_M^{i M/M2} = *this by Gaussian elimination over Q
    std::vector<std::vector<mpq_class>> cols(phi2);
    const auto& tab = power_table(M);
    long step = M / M2;
    for (long i = 0; i < phi2; ++i) {
        const auto& row = tab[mod_lo(i * step, M)];
        cols[i].assign(row.begin(), row.end());
    }
    // augmented system: phi1 equations, phi2 unknowns
    std::vector<std::vector<mpq_class>> A(phi1, std::vector<mpq_class>(phi2 + 1));
    for (long r = 0; r < phi1; ++r) {
        for (long i = 0; i < phi2; ++i) A[r][i] = cols[i][r];
        A[r][phi2] = c[r];
    }
    std::vector<long> pivot_col(phi1, -1);
    long rank = 0;
    for (long col = 0; col < phi2 && rank < phi1; ++col) {
        long piv = -1;
        for (long r = rank; r < phi1; ++r)
            if (A[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(A[rank], A[piv]);
        mpq_class inv = 1 / A[rank][col];
        for (long j = col; j <= phi2; ++j) A[rank][j] *= inv;
        for (long r = 0; r < phi1; ++r) {
            if (r == rank || A[r][col] == 0) continue;
            mpq_class f = A[r][col];
            for (long j = col; j <= phi2; ++j) A[r][j] -= f * A[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (long r = rank; r < phi1; ++r)
        if (A[r][phi2] != 0) return std::nullopt;  // inconsistent: not in the subfield
    std::vector<mpq_class> sol(phi2, mpq_class(0));
    for (long r = 0; r < rank; ++r) sol[pivot_col[r]] = A[r][phi2];
    return CycloNumber(M2, std::move(sol));
}

mpz_class CycloNumber::height() const {
    mpz_class h = 0;
    for (const auto& x : c) {
        mpz_class n = abs(x.get_num()), d = x.get_den();
        if (n > h) h = n;
        if (d > h) h = d;
    }
    return h;
}

std::string CycloNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < degree(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        os << c[i].get_str();
        if (i >= 1) os << "*z" << M << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycloNumber galois_sigma(long u, const CycloNumber& x) {
    if (!is_unit_mod(u, x.M)) throw std::invalid_argument("galois_sigma: u not a unit");
    CycloNumber r(x.M);
    const auto& tab = power_table(x.M);
    for (long i = 0; i < x.degree(); ++i) {
        if (x.c[i] == 0) continue;
        const auto& row = tab[mod_lo(i * u, x.M)];
        for (long j = 0; j < r.degree(); ++j) r.c[j] += x.c[i] * row[j];
    }
    return r;
}

CycloNumber cyclo_conj(const CycloNumber& x) {
    if (x.M == 1 || x.M == 2) return x;
    return galois_sigma(x.M - 1, x);
}

BigComplex embed_complex(const CycloNumber& x, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    BigComplex zeta = BigComplex::root_of_unity(1, x.M, wp);
    BigComplex acc(wp), power = BigComplex::from_mpq(1, wp);
    for (long i = 0; i < x.degree(); ++i) {
        if (x.c[i] != 0) acc = acc + BigComplex::from_mpq(x.c[i], wp) * power;
        if (i + 1 < x.degree()) power = power * zeta;
    }
    return acc;
}

}  // namespace fermatst
