#include "fermatst/unramified.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fermatst/lll.hpp"
#include "fermatst/modarith.hpp"

namespace fermatst {

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

// ---------- polynomials over Z/q, coefficient vectors without forced trim ----------

using Poly = std::vector<mpz_class>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, const mpz_class& q) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& x : r) x = mod_reduce(x, q);
    trim(r);
    return r;
}

Poly padd(const Poly& a, const Poly& b, const mpz_class& q) {
    Poly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    for (auto& x : r) x = mod_reduce(x, q);
    trim(r);
    return r;
}

Poly psub(const Poly& a, const Poly& b, const mpz_class& q) {
    Poly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    for (auto& x : r) x = mod_reduce(x, q);
    trim(r);
    return r;
}

// divisor must have unit leading coefficient mod q
std::pair<Poly, Poly> pdivmod(const Poly& a, const Poly& b, const mpz_class& q) {
    if (b.empty()) throw std::invalid_argument("pdivmod: zero divisor");
    mpz_class lcinv = inv_mod_z(b.back(), q);
    Poly rem = a, quo;
    trim(rem);
    if (rem.size() >= b.size()) quo.assign(rem.size() - b.size() + 1, mpz_class(0));
    while (rem.size() >= b.size()) {
        mpz_class f = mod_reduce(rem.back() * lcinv, q);
        size_t shift = rem.size() - b.size();
        quo[shift] = f;
        if (f != 0)
            for (size_t j = 0; j < b.size(); ++j) rem[shift + j] = mod_reduce(rem[shift + j] - f * b[j], q);
        // leading term cancels exactly
        rem.pop_back();
        trim(rem);
    }
    return {quo, rem};
}

Poly pmod(const Poly& a, const Poly& b, const mpz_class& q) { return pdivmod(a, b, q).second; }

Poly ppow_mod(Poly base, mpz_class e, const Poly& mod, const mpz_class& q) {
    Poly acc{mpz_class(1)};
    base = pmod(base, mod, q);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = pmod(pmul(acc, base, q), mod, q);
        base = pmod(pmul(base, base, q), mod, q);
        e >>= 1;
    }
    return acc;
}

Poly pgcd(Poly a, Poly b, const mpz_class& p) {
    trim(a); trim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        mpz_class lcinv = inv_mod_z(a.back(), p);
        for (auto& x : a) x = mod_reduce(x * lcinv, p);
    }
    return a;
}

// extended gcd over F_p: returns (g, s, t) with s a + t b = g, g monic
std::tuple<Poly, Poly, Poly> pxgcd(Poly a, Poly b, const mpz_class& p) {
    Poly s0{mpz_class(1)}, s1{}, t0{}, t1{mpz_class(1)};
    trim(a); trim(b);
    while (!b.empty()) {
        auto [q, r] = pdivmod(a, b, p);
        Poly s2 = psub(s0, pmul(q, s1, p), p);
        Poly t2 = psub(t0, pmul(q, t1, p), p);
        a = std::move(b); b = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (a.empty()) throw std::logic_error("pxgcd: zero gcd");
    mpz_class lcinv = inv_mod_z(a.back(), p);
    for (auto& x : a) x = mod_reduce(x * lcinv, p);
    for (auto& x : s0) x = mod_reduce(x * lcinv, p);
    for (auto& x : t0) x = mod_reduce(x * lcinv, p);
    return {a, s0, t0};
}

// All monic irreducible factors of the squarefree F (mod p), all of equal
// degree f.  Deterministic splitting witnesses.
void equal_degree_factor(const Poly& F, long f, const mpz_class& p, std::vector<Poly>& out) {
    long deg = (long)F.size() - 1;
    if (deg == f) {
        out.push_back(F);
        return;
    }
    mpz_class pf;
    mpz_pow_ui(pf.get_mpz_t(), p.get_mpz_t(), (unsigned long)f);
    mpz_class e = (pf - 1) / 2;
    // deterministic witness sequence: x+c, then x^2+c x, then x^3+c x, ...
    for (long lead = 1; lead <= deg; ++lead) {
        for (mpz_class c = 0; c < p; ++c) {
            Poly w(lead + 1, mpz_class(0));
            w[lead] = 1;
            if (lead == 1) w[0] = c; else w[1] = c;
            Poly g = ppow_mod(w, e, F, p);
            if (g.empty()) continue;
            g[0] = mod_reduce(g[0] - 1, p);
            trim(g);
            Poly d = pgcd(g, F, p);
            long dd = (long)d.size() - 1;
            if (dd > 0 && dd < deg) {
                auto [quo, rem] = pdivmod(F, d, p);
                if (!rem.empty()) throw std::logic_error("equal_degree_factor: division failure");
                equal_degree_factor(d, f, p, out);
                equal_degree_factor(quo, f, p, out);
                return;
            }
        }
    }
    throw std::logic_error("equal_degree_factor: no splitting witness found");
}

// Quadratic Hensel lifting of F = g*h from mod p to mod p^k (F, g, h monic).
std::pair<Poly, Poly> hensel_lift_pair(const Poly& F, Poly g, Poly h, long p, long k) {
    // Bezout: s g + t h = 1 mod p, deg s < deg h, deg t < deg g
    auto [one, s, t] = pxgcd(g, h, mpz_class(p));
    if (one.size() != 1) throw std::logic_error("hensel_lift_pair: factors not coprime");
    s = pmod(s, h, mpz_class(p));
    t = pmod(t, g, mpz_class(p));
    long prec = 1;
    mpz_class q(p);
    while (prec < k) {
        long next = std::min(2 * prec, k);
        mpz_class q2 = pow_long(p, next);
        // e = F - g h
        Poly e = psub(F, pmul(g, h, q2), q2);
        // g' = g + (t e mod g), h' = h + (s e mod h)... with degree control:
        auto [qq, r] = pdivmod(pmul(s, e, q2), h, q2);
        Poly gnew = padd(g, padd(pmul(t, e, q2), pmul(qq, g, q2), q2), q2);
        Poly hnew = padd(h, r, q2);
        // lift the Bezout identity
        Poly b = psub(pmul(s, gnew, q2), Poly{mpz_class(1)}, q2);
        b = padd(b, pmul(t, hnew, q2), q2);
        auto [cc, d] = pdivmod(pmul(s, b, q2), hnew, q2);
        Poly snew = psub(s, d, q2);
        Poly tnew = psub(t, padd(pmul(t, b, q2), pmul(cc, gnew, q2), q2), q2);
        g = std::move(gnew); h = std::move(hnew);
        s = std::move(snew); t = std::move(tnew);
        prec = next;
        q = q2;
    }
    return {g, h};
}

std::mutex g_place_mutex;
std::map<std::tuple<long, long, long>, FrobeniusPlace> g_place_cache;
std::map<std::pair<long, long>, Poly> g_factor_mod_p_cache;  // canonical factor of Phi_M mod p

Poly canonical_factor_mod_p(long p, long M) {
    auto key = std::make_pair(p, M);
    auto it = g_factor_mod_p_cache.find(key);
    if (it != g_factor_mod_p_cache.end()) return it->second;
    const auto& phiM = cyclotomic_polynomial(M);
    Poly F(phiM.begin(), phiM.end());
    for (auto& x : F) x = mod_reduce(x, mpz_class(p));
    trim(F);
    if ((long)F.size() != (long)phiM.size()) throw std::logic_error("canonical_factor_mod_p: leading coefficient vanished");
    long f = mult_order(p, M);
    std::vector<Poly> factors;
    equal_degree_factor(F, f, mpz_class(p), factors);
    std::sort(factors.begin(), factors.end(), [](const Poly& a, const Poly& b) {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return a.size() < b.size();
    });
    return g_factor_mod_p_cache[key] = factors.front();
}

}  // namespace

std::vector<long> place_factor_mod_p(long p, long conductor) {
    std::lock_guard<std::mutex> lk(g_place_mutex);
    Poly h0 = canonical_factor_mod_p(p, conductor);
    std::vector<long> out(h0.size());
    for (size_t i = 0; i < h0.size(); ++i) out[i] = (long)h0[i].get_si();
    return out;
}

FrobeniusPlace frobenius_place(long p, long conductor, long k, bool geometric) {
    if (!is_prime_long(p) || p == 2) throw std::invalid_argument("frobenius_place: p must be an odd prime");
    if (conductor < 1 || conductor % p == 0) throw std::invalid_argument("frobenius_place: p divides the conductor");
    std::lock_guard<std::mutex> lk(g_place_mutex);
    auto key = std::make_tuple(p, conductor, k);
    auto it = g_place_cache.find(key);
    if (it == g_place_cache.end()) {
        Poly h0 = canonical_factor_mod_p(p, conductor);
        const auto& phiM = cyclotomic_polynomial(conductor);
        mpz_class q = pow_long(p, k);
        Poly F(phiM.begin(), phiM.end());
        for (auto& x : F) x = mod_reduce(x, q);
        Poly h;
        if (h0.size() < F.size()) {
            Poly Fp(phiM.begin(), phiM.end());
            for (auto& x : Fp) x = mod_reduce(x, mpz_class(p));
            auto [gmodp, rem] = pdivmod(Fp, h0, mpz_class(p));
            if (!rem.empty()) throw std::logic_error("frobenius_place: factor does not divide");
            auto [gk, hk] = hensel_lift_pair(F, gmodp, h0, p, k);
            Poly check = psub(F, pmul(gk, hk, q), q);
            if (!check.empty()) throw std::logic_error("frobenius_place: Hensel lift failed");
            h = hk;
        } else {
            // Phi_M is irreducible mod p: the factor is Phi_M itself mod p^k
            h = F;
        }
        FrobeniusPlace place;
        place.p = p;
        place.conductor = conductor;
        place.k = k;
        place.f = mult_order(p, conductor);
        place.geometric = geometric;
        place.factor = h;
        if ((long)place.factor.size() != place.f + 1) throw std::logic_error("frobenius_place: wrong factor degree");
        it = g_place_cache.emplace(key, std::move(place)).first;
    }
    FrobeniusPlace out = it->second;
    out.geometric = geometric;
    return out;
}

long frobenius_unit(const FrobeniusPlace& place) {
    long pm = mod_lo(place.p, place.conductor);
    return place.geometric ? inv_mod(pm, place.conductor) : pm;
}

std::string FrobeniusPlace::str() const {
    std::ostringstream os;
    os << "place(p=" << p << ", M=" << conductor << ", f=" << f << ", k=" << k
       << (geometric ? ", geometric" : ", arithmetic") << ")";
    return os.str();
}

UnramifiedElement UnramifiedElement::from_padic(const PadicInt& x, const FrobeniusPlace& place) {
    if (x.p != place.p || x.k > place.k) throw std::invalid_argument("UnramifiedElement::from_padic: precision mismatch");
    UnramifiedElement e;
    e.p = place.p;
    e.k = x.k;
    e.place = std::make_shared<FrobeniusPlace>(place);
    e.c.assign(place.f, mpz_class(0));
    e.c[0] = x.r;
    return e;
}

UnramifiedElement UnramifiedElement::root_of_unity_power(const FrobeniusPlace& place, long t) {
    mpz_class q = pow_long(place.p, place.k);
    Poly x{mpz_class(0), mpz_class(1)};
    Poly r = ppow_mod(x, mpz_class(mod_lo(t, place.conductor)), place.factor, q);
    UnramifiedElement e;
    e.p = place.p;
    e.k = place.k;
    e.place = std::make_shared<FrobeniusPlace>(place);
    e.c.assign(place.f, mpz_class(0));
    for (size_t i = 0; i < r.size(); ++i) e.c[i] = r[i];
    return e;
}

namespace {
void check_compatible(const UnramifiedElement& a, const UnramifiedElement& b) {
    if (a.p != b.p || a.k != b.k || !a.place || !b.place || a.place->conductor != b.place->conductor)
        throw std::invalid_argument("UnramifiedElement: incompatible operands");
}
}  // namespace

UnramifiedElement UnramifiedElement::operator+(const UnramifiedElement& o) const {
    check_compatible(*this, o);
    UnramifiedElement r = *this;
    mpz_class q = pow_long(p, k);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = mod_reduce(c[i] + o.c[i], q);
    return r;
}

UnramifiedElement UnramifiedElement::operator-(const UnramifiedElement& o) const {
    check_compatible(*this, o);
    UnramifiedElement r = *this;
    mpz_class q = pow_long(p, k);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = mod_reduce(c[i] - o.c[i], q);
    return r;
}

UnramifiedElement UnramifiedElement::operator*(const UnramifiedElement& o) const {
    check_compatible(*this, o);
    mpz_class q = pow_long(p, k);
    Poly a(c.begin(), c.end()), b(o.c.begin(), o.c.end());
    trim(a); trim(b);
    Poly prod = pmod(pmul(a, b, q), place->factor, q);
    UnramifiedElement r = *this;
    r.c.assign(place->f, mpz_class(0));
    for (size_t i = 0; i < prod.size(); ++i) r.c[i] = prod[i];
    return r;
}

bool UnramifiedElement::is_unit() const {
    for (const auto& x : c)
        if (x % p != 0) return true;
    return false;
}

UnramifiedElement UnramifiedElement::inverse() const {
    if (!is_unit()) throw std::domain_error("UnramifiedElement::inverse: not a unit");
    // invert mod p by extended gcd, then Newton-lift
    Poly a(c.begin(), c.end());
    trim(a);
    Poly amodp = a;
    for (auto& x : amodp) x = mod_reduce(x, mpz_class(p));
    trim(amodp);
    Poly hmodp = place->factor;
    for (auto& x : hmodp) x = mod_reduce(x, mpz_class(p));
    auto [g, s, t] = pxgcd(amodp, hmodp, mpz_class(p));
    if (g.size() != 1) throw std::logic_error("UnramifiedElement::inverse: gcd not constant");
    Poly y = s;  // y = a^{-1} mod (p, h)
    long prec = 1;
    while (prec < k) {
        long next = std::min(2 * prec, k);
        mpz_class q = pow_long(p, next);
        // y <- y (2 - a y) mod (h, p^next)
        Poly ay = pmod(pmul(a, y, q), place->factor, q);
        Poly two_m = psub(Poly{mpz_class(2)}, ay, q);
        y = pmod(pmul(y, two_m, q), place->factor, q);
        prec = next;
    }
    UnramifiedElement r = *this;
    r.c.assign(place->f, mpz_class(0));
    for (size_t i = 0; i < y.size(); ++i) r.c[i] = y[i];
    return r;
}

bool UnramifiedElement::operator==(const UnramifiedElement& o) const {
    check_compatible(*this, o);
    return c == o.c;
}

bool UnramifiedElement::congruent_mod(const UnramifiedElement& o, long k2) const {
    if (p != o.p || !place || !o.place || place->conductor != o.place->conductor)
        throw std::invalid_argument("UnramifiedElement::congruent_mod: incompatible");
    if (k2 > k || k2 > o.k) throw std::invalid_argument("congruent_mod: precision too low");
    mpz_class q = pow_long(p, k2);
    for (size_t i = 0; i < c.size(); ++i)
        if (mod_reduce(c[i] - o.c[i], q) != 0) return false;
    return true;
}

std::string UnramifiedElement::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].get_str();
    os << "] mod " << p << "^" << k;
    return os.str();
}

UnramifiedElement embed_cyclotomic_padic(const CycloNumber& x, const FrobeniusPlace& place) {
    if (place.conductor % x.M != 0)
        throw std::invalid_argument("embed_cyclotomic_padic: conductor of the value does not divide the place's");
    CycloNumber lifted = x.lift_to(place.conductor);
    mpz_class q = pow_long(place.p, place.k);
    // Horner over the power basis
    Poly acc;
    Poly xi{mpz_class(0), mpz_class(1)};
    for (long i = lifted.degree() - 1; i >= 0; --i) {
        acc = pmod(pmul(acc, xi, q), place.factor, q);
        const mpq_class& co = lifted.c[i];
        if (co != 0) {
            if (co.get_den() % place.p == 0)
                throw std::invalid_argument("embed_cyclotomic_padic: coefficient not p-integral");
            mpz_class val = mod_reduce(co.get_num() * inv_mod_z(co.get_den(), q), q);
            acc = padd(acc, Poly{val}, q);
        }
    }
    UnramifiedElement e;
    e.p = place.p;
    e.k = place.k;
    e.place = std::make_shared<FrobeniusPlace>(place);
    e.c.assign(place.f, mpz_class(0));
    for (size_t i = 0; i < acc.size(); ++i) e.c[i] = acc[i];
    return e;
}

PadicRecognition recognize_padic(const UnramifiedElement& y, const mpz_class& height_bound) {
    PadicRecognition out;
    const FrobeniusPlace& place = *y.place;
    const long M = place.conductor;
    const long phi = euler_phi(M);
    const long f = place.f;
    mpz_class pk = pow_long(y.p, y.k);
    if (pk <= 2 * height_bound * height_bound * phi * phi) {
        out.diagnostics = "recognize_padic: p^k below the uniqueness threshold";
        return out;
    }

    // powers of the root
    std::vector<UnramifiedElement> pows(phi);
    for (long i = 0; i < phi; ++i) pows[i] = UnramifiedElement::root_of_unity_power(place, i);

    // The congruence block is weighted so that any vector with a nonzero
    // residual is longer than every bounded-height relation.
    mpz_class W = pk;
    const size_t n = (size_t)phi + 1;
    ZMat B(n + (size_t)f, n + (size_t)f);
    for (long i = 0; i < phi; ++i) {
        B.at(i, i) = 1;
        for (long t = 0; t < f; ++t) B.at(i, n + t) = W * pows[i].c[t];
    }
    B.at(phi, phi) = 1;
    for (long t = 0; t < f; ++t) B.at(phi, n + t) = -W * y.c[t];
    for (long t = 0; t < f; ++t) B.at(phi + 1 + t, n + t) = W * pk;

    lll_reduce(B);

    for (size_t r = 0; r < B.rows; ++r) {
        mpz_class den = B.at(r, phi);
        if (den == 0) continue;
        bool ok = true;
        std::vector<mpq_class> coeffs(phi);
        for (long i = 0; i < phi && ok; ++i) {
            mpq_class qv(B.at(r, i), den);
            qv.canonicalize();
            if (abs(qv.get_num()) > height_bound || qv.get_den() > height_bound) ok = false;
            else if (qv.get_den() % y.p == 0) ok = false;
            else coeffs[i] = qv;
        }
        if (!ok) continue;
        CycloNumber cand(M, std::move(coeffs));
        UnramifiedElement back = embed_cyclotomic_padic(cand, place);
        if (back.congruent_mod(y, y.k)) {
            out.value = std::move(cand);
            out.verified = true;
            return out;
        }
    }
    out.diagnostics = "recognize_padic: no bounded-height preimage";
    return out;
}

}  // namespace fermatst
