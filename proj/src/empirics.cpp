#include "fermatst/empirics.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fermatst/galois.hpp"
#include "fermatst/modarith.hpp"
#include "fermatst/sato_tate.hpp"
#include "fermatst/unramified.hpp"

namespace fermatst {

namespace {

constexpr int kMaxInertia = 16;

// F_{p^f} = F_p[x]/(h0), elements as coefficient arrays.  Sized for desk
// scale: q = p^f <= ~10^7.
struct SmallField {
    long p = 2;
    long f = 1;
    long q = 2;
    std::array<long, kMaxInertia + 1> h0{};  // monic factor of Phi_m mod p

    using Elt = std::array<long, kMaxInertia>;

    Elt zero() const { return Elt{}; }
    Elt one() const { Elt e{}; e[0] = 1; return e; }
    Elt from_long(long v) const { Elt e{}; e[0] = mod_lo(v, p); return e; }

    bool is_zero(const Elt& a) const {
        for (long i = 0; i < f; ++i)
            if (a[i]) return false;
        return true;
    }

    Elt add(const Elt& a, const Elt& b) const {
        Elt r{};
        for (long i = 0; i < f; ++i) { r[i] = a[i] + b[i]; if (r[i] >= p) r[i] -= p; }
        return r;
    }

    Elt mul(const Elt& a, const Elt& b) const {
        std::array<long, 2 * kMaxInertia> t{};
        for (long i = 0; i < f; ++i) {
            if (!a[i]) continue;
            for (long j = 0; j < f; ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % p;
        }
        for (long d = 2 * f - 2; d >= f; --d) {
            long c = t[d];
            if (!c) continue;
            t[d] = 0;
            for (long j = 0; j < f; ++j) t[d - f + j] = mod_lo(t[d - f + j] - c * h0[j], p);
        }
        Elt r{};
        for (long i = 0; i < f; ++i) r[i] = t[i];
        return r;
    }

    Elt pow(Elt b, long e) const {
        Elt r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    long encode(const Elt& a) const {
        long v = 0;
        for (long i = f - 1; i >= 0; --i) v = v * p + a[i];
        return v;
    }

    Elt decode(long v) const {
        Elt e{};
        for (long i = 0; i < f; ++i) { e[i] = v % p; v /= p; }
        return e;
    }

    // deterministic generator of the multiplicative group
    Elt generator() const {
        std::vector<long> prime_factors;
        long n = q - 1;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) { prime_factors.push_back(d); while (n % d == 0) n /= d; }
        if (n > 1) prime_factors.push_back(n);
        for (long v = 2; v < q; ++v) {
            Elt g = decode(v);
            bool ok = true;
            for (long ell : prime_factors)
                if (is_zero(add(pow(g, (q - 1) / ell), from_long(-1)))) { ok = false; break; }
            if (ok) return g;
        }
        throw std::logic_error("SmallField::generator: none found");
    }
};

SmallField make_field(long m, long p, long f) {
    if (p == 2 || !is_prime_long(p)) throw std::invalid_argument("make_field: p must be an odd prime");
    if (f != mult_order(p, m)) throw std::invalid_argument("make_field: f must be the order of p mod m");
    if (f > kMaxInertia) throw std::invalid_argument("make_field: inertia degree too large");
    SmallField F;
    F.p = p;
    F.f = f;
    long q = 1;
    for (long i = 0; i < f; ++i) {
        q *= p;
        if (q > 100000000L) throw std::invalid_argument("make_field: field too large for enumeration");
    }
    F.q = q;
    std::vector<long> h = place_factor_mod_p(p, m);
    if ((long)h.size() != f + 1) throw std::logic_error("make_field: factor degree mismatch");
    for (long i = 0; i <= f; ++i) F.h0[i] = h[i];
    return F;
}

long reduce_param(const mpq_class& a, long p) {
    if (a == 0) throw std::invalid_argument("curve parameter must be nonzero");
    if (mpz_class(a.get_den() % p) == 0 || mpz_class(a.get_num() % p) == 0)
        throw std::invalid_argument("bad reduction: p divides the curve parameter");
    mpz_class num = a.get_num() % p, den = a.get_den() % p;
    long n = mod_lo((long)num.get_si(), p);
    long d = mod_lo((long)den.get_si(), p);
    return mod_lo(n * inv_mod(d, p), p);
}

// quadratic-character table over encodings: +1 square, -1 nonsquare, 0 zero
std::vector<int8_t> quadratic_table(const SmallField& F) {
    std::vector<int8_t> sign(F.q, 0);
    SmallField::Elt g = F.generator();
    SmallField::Elt cur = F.one();
    for (long t = 0; t < F.q - 1; ++t) {
        sign[F.encode(cur)] = (t % 2 == 0) ? 1 : -1;
        cur = F.mul(cur, g);
    }
    return sign;
}

}  // namespace

CurveCount point_count(long m, const mpq_class& a, long p, long f) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("point_count: m must be odd >= 3");
    if (p == 2 || m % p == 0) throw std::invalid_argument("point_count: bad reduction at p");
    long ford = mult_order(p, m);
    SmallField F = make_field(m, p, ford);
    // counting works over any extension degree that is a multiple of the
    // inertia degree of the base presentation; we only need f = ford here
    if (f != ford) throw std::invalid_argument("point_count: f must equal the order of p mod m");
    std::vector<int8_t> sign = quadratic_table(F);
    long abar = reduce_param(a, p);
    SmallField::Elt aelt = F.from_long(abar);
    SmallField::Elt g = F.generator();
    SmallField::Elt gm = F.pow(g, mod_lo(m, F.q - 1));
    // affine points: sum over x of 1 + eta(x^m + a); x = 0 contributes 1 + eta(a)
    long s = sign[F.encode(aelt)];
    SmallField::Elt cur = F.one();
    for (long t = 0; t < F.q - 1; ++t) {
        s += sign[F.encode(F.add(cur, aelt))];
        cur = F.mul(cur, gm);
    }
    CurveCount c;
    c.m = m;
    c.a = a;
    c.p = p;
    c.f = f;
    c.count = F.q + 1 + s;  // one point at infinity (m odd)
    // Weil bound sanity
    double bound = (double)(m - 1) * sqrt((double)F.q);
    if (std::abs((double)c.count - (double)(F.q + 1)) > bound + 1e-9)
        throw std::logic_error("point_count: Weil bound violated");
    return c;
}

namespace {
std::mutex g_eig_mutex;
std::map<std::tuple<long, long, long, std::string>, EigenvalueData> g_eig_cache;
}  // namespace

EigenvalueData frobenius_eigenvalues(long m, const mpq_class& a, long p, long f) {
    long ford = mult_order(p, m);
    if (f != ford) throw std::invalid_argument("frobenius_eigenvalues: f must equal the order of p mod m");
    auto key = std::make_tuple(m, p, f, a.get_str());
    {
        std::lock_guard<std::mutex> lk(g_eig_mutex);
        auto it = g_eig_cache.find(key);
        if (it != g_eig_cache.end()) return it->second;
    }
    SmallField F = make_field(m, p, f);
    if ((F.q - 1) % m != 0) throw std::logic_error("frobenius_eigenvalues: q != 1 mod m");
    std::vector<int8_t> sign = quadratic_table(F);
    long abar = reduce_param(a, p);
    SmallField::Elt aelt = F.from_long(abar);
    SmallField::Elt g = F.generator();

    // power-residue character through the place: xbar = class of x is the
    // canonical primitive m-th root; find s with g^{(q-1)/m} = xbar^s, so
    // that chi(g^t) = zeta_m^{s t}
    SmallField::Elt xbar{};
    if (f == 1)
        xbar[0] = mod_lo(-F.h0[0], p);  // root of the linear factor
    else
        xbar[1] = 1;
    SmallField::Elt G = F.pow(g, (F.q - 1) / m);
    long dlog_root = -1;
    {
        SmallField::Elt cur = F.one();
        for (long s = 0; s < m; ++s) {
            if (cur == G) { dlog_root = s; break; }
            cur = F.mul(cur, xbar);
        }
    }
    if (dlog_root <= 0 || !is_unit_mod(dlog_root, m))
        throw std::logic_error("frobenius_eigenvalues: power-residue normalization failed");

    // bucket counts: N[r][0] for eta = +1, N[r][1] for eta = -1, r = t mod m
    std::vector<std::array<long, 2>> N(m, {0, 0});
    SmallField::Elt cur = F.one();
    for (long t = 0; t < F.q - 1; ++t) {
        int8_t s = sign[F.encode(F.add(cur, aelt))];
        if (s != 0) N[t % m][s > 0 ? 0 : 1]++;
        cur = F.mul(cur, g);
    }

    // S_d = sum_t chi^d(g^t) eta(g^t + a) with chi(g^t) = zeta^{dlog_root * t}
    EigenvalueData E;
    E.m = m;
    E.a = a;
    E.p = p;
    E.f = f;
    E.eig.resize(m - 1);
    for (long j = 1; j < m; ++j) {
        // d(j) = j: pi_j = -S_j
        CycloNumber S(m);
        for (long r = 0; r < m; ++r) {
            long diff = N[r][0] - N[r][1];
            if (diff == 0) continue;
            long expo = mod_lo(j * dlog_root * r, m);
            S = S + CycloNumber::zeta(m, expo) * CycloNumber::from_rational(diff, m);
        }
        E.eig[j - 1] = -S;
    }

    // built-in oracles: trace vs point count, Weil pairing
    CurveCount c = point_count(m, a, p, f);
    CycloNumber trace(m);
    for (const auto& x : E.eig) trace = trace + x;
    CycloNumber expected = CycloNumber::from_rational(mpq_class(F.q + 1 - c.count), m);
    if (!(trace == expected)) throw std::logic_error("frobenius_eigenvalues: trace does not match the point count");
    for (long j = 1; 2 * j < m; ++j) {
        CycloNumber prod = E.eig[j - 1] * E.eig[m - j - 1];
        if (!(prod == CycloNumber::from_rational(mpq_class(F.q), m)))
            throw std::logic_error("frobenius_eigenvalues: Weil pairing violated");
    }
    std::lock_guard<std::mutex> lk(g_eig_mutex);
    return g_eig_cache[key] = E;
}

bool tate_eigenvalue_check(long m, const mpq_class& a, long p, const ExponentVector& e, long k) {
    long f = mult_order(p, m);
    EigenvalueData E = frobenius_eigenvalues(m, a, p, f);
    long esum = e.coordinate_sum();
    if (esum % 2 != 0) throw std::invalid_argument("tate_eigenvalue_check: odd coordinate sum");
    // unitarized product prod_j (pi_j / p^{f/2})^{e_j}
    CycloNumber lhs = CycloNumber::from_rational(1, m);
    for (long j = 1; j < m; ++j) {
        long ej = e.e[j - 1];
        if (ej != 0) lhs = lhs * E.eig[j - 1].pow_long(ej);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), (unsigned long)p, (unsigned long)(f * std::abs(esum) / 2));
    if (esum > 0)
        lhs = lhs / CycloNumber::from_rational(mpq_class(scale), m);
    else if (esum < 0)
        lhs = lhs * CycloNumber::from_rational(mpq_class(scale), m);

    // Gamma-route side: diagonal of rho(Frob_p)^f on the line of char(e)
    GammaWord w = char_of_exponent(e);
    WordOrbit orbit = word_orbit(w);
    ActionBlock blk = rho_frobenius_block(p, orbit, k);
    CycloNumber rhs = CycloNumber::from_rational(1);
    GammaWord curw = w;
    for (long s = 0; s < f; ++s) {
        rhs = rhs * blk.coeff_of(curw);
        curw = curw.unit_multiple(p);
    }
    if (!(curw == w)) throw std::logic_error("tate_eigenvalue_check: orbit walk did not close");
    return lhs == rhs;
}

TwistReport twist_invariance(long m, const mpq_class& a, long p_bound, long k, long qf_cap) {
    TwistReport rep;
    rep.m = m;
    rep.a = a;
    rep.p_bound = p_bound;
    IdentityComponent ic = identity_component(m);
    for (long p : primes_below(p_bound)) {
        if (p == 2 || m % p == 0) continue;
        mpz_class bad = mpz_class(a.get_num()) * mpz_class(a.get_den());
        if (bad % p == 0) continue;
        long f = mult_order(p, m);
        double qf = pow((double)p, (double)f);
        if (qf > (double)qf_cap) continue;
        TwistCheckRow row;
        row.p = p;
        row.f = f;
        for (size_t r = 0; r < ic.lattice.rows; ++r) {
            std::vector<long> ev(m - 1);
            for (long j = 0; j < m - 1; ++j) ev[j] = (long)ic.lattice.at(r, j).get_si();
            ExponentVector e(m, ev);
            bool oa = tate_eigenvalue_check(m, a, p, e, k);
            bool o1 = tate_eigenvalue_check(m, 1, p, e, k);
            row.outcomes_a.push_back(oa);
            row.outcomes_1.push_back(o1);
            if (oa != o1) row.agree = false;
        }
        if (!row.agree) rep.all_agree = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace fermatst
