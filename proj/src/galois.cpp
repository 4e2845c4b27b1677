#include "fermatst/galois.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fermatst/modarith.hpp"
#include "fermatst/recognize.hpp"

namespace fermatst {

GaloisHandle GaloisHandle::frobenius(long p) {
    GaloisHandle h;
    h.kind = Kind::frobenius;
    h.p = p;
    return h;
}

GaloisHandle GaloisHandle::conjugation() {
    GaloisHandle h;
    h.kind = Kind::conjugation;
    return h;
}

GaloisHandle GaloisHandle::word(const GaloisHandle& a, const GaloisHandle& b) {
    GaloisHandle h;
    h.kind = Kind::word;
    h.parts = {a, b};
    return h;
}

std::string GaloisHandle::str() const {
    switch (kind) {
        case Kind::identity: return "id";
        case Kind::frobenius: { std::ostringstream os; os << "Frob_" << p; return os.str(); }
        case Kind::conjugation: return "conj";
        case Kind::word: return parts[0].str() + "*" + parts[1].str();
    }
    return "?";
}

CycloNumber ActionBlock::omega_coeff_of(const GammaWord& beta) const {
    // nu_beta = E_beta omega_beta, so the omega coefficient picks up
    // E_{u^{-1} beta} / E_beta.
    long uprime = inv_mod(u, orbit.m);
    GammaWord target = beta.unit_multiple(uprime);
    mpq_class ratio = basis_scale_E(target) / basis_scale_E(beta);
    ratio.canonicalize();
    return coeff_of(beta) * CycloNumber::from_rational(ratio);
}

bool ActionBlock::is_identity() const {
    if (mod_lo(u, orbit.m) != 1) return false;
    CycloNumber one = CycloNumber::from_rational(1);
    for (const auto& c : coeff)
        if (!(c == one)) return false;
    return true;
}

const ActionBlock& RhoMatrix::block_for(const GammaWord& beta) const {
    GammaWord canon = word_orbit(beta).canonical();
    for (const auto& b : blocks)
        if (b.orbit.canonical() == canon) return b;
    throw std::invalid_argument("RhoMatrix::block_for: orbit not in working set");
}

bool RhoMatrix::is_identity() const {
    if (mod_lo(u, m) != 1) return false;
    for (const auto& b : blocks)
        if (!b.is_identity()) return false;
    return true;
}

std::vector<long> shape_of(long u, long m) {
    long v = inv_mod(u, m);
    std::vector<long> perm(m - 1);
    for (long j = 1; j < m; ++j) perm[j - 1] = mod_lo(v * j, m);
    return perm;
}

namespace {

// (-1)^{<beta>} Gamma_p-hat(p beta)^{-1} recognized in Q(zeta_m); k is
// escalated on recognition failure.
CycloNumber frobenius_coefficient(long p, const GammaWord& beta, long k) {
    const long m = beta.m;
    const mpz_class height_bound = 100000;
    const long phi = euler_phi(m);
    // uniqueness threshold p^k > 2 h^2 phi^2
    mpz_class need = 2 * height_bound * height_bound * phi * phi;
    long k0 = k;
    while (pow_long(p, k0) <= need) ++k0;
    long w = weight_integer(beta);
    for (long kk : {k0, k0 + 10, k0 + 20, k0 + 40}) {
        FrobeniusPlace place = frobenius_place(p, m, kk);
        PadicInt val = gamma_hat_p(mod_lo(p, m), beta, p, kk).inverse();
        if (w % 2 != 0) val = -val;
        PadicRecognition rec = recognize_padic(UnramifiedElement::from_padic(val, place), height_bound);
        if (rec.verified) return rec.value;
    }
    throw std::logic_error("rho_frobenius_block: p-adic recognition failed for " + beta.str());
}

}  // namespace

namespace {
std::mutex g_blk_mutex;
std::map<std::tuple<long, long, std::vector<long>, long>, ActionBlock> g_blk_cache;
}  // namespace

ActionBlock rho_frobenius_block(long p, const WordOrbit& orbit, long k) {
    if (orbit.m % p == 0) throw std::invalid_argument("rho_frobenius_block: p divides m");
    auto key = std::make_tuple(orbit.m, p, orbit.canonical().idx, k);
    {
        std::lock_guard<std::mutex> lk(g_blk_mutex);
        auto it = g_blk_cache.find(key);
        if (it != g_blk_cache.end()) return it->second;
    }
    ActionBlock blk;
    blk.orbit = orbit;
    blk.u = inv_mod(p, orbit.m);  // geometric Frobenius
    blk.coeff.reserve(orbit.members.size());
    for (const auto& beta : orbit.members) blk.coeff.push_back(frobenius_coefficient(p, beta, k));
    std::lock_guard<std::mutex> lk(g_blk_mutex);
    return g_blk_cache[key] = blk;
}

namespace {

std::mutex g_ghat_mutex;
std::map<std::pair<std::vector<long>, long>, std::optional<CycloNumber>> g_ghat_cache;

}  // namespace

std::optional<CycloNumber> recognize_gamma_hat(const GammaWord& word, mpfr_prec_t prec) {
    std::vector<long> key_idx = word.idx;
    key_idx.push_back(word.m);
    auto key = std::make_pair(key_idx, (long)prec);
    {
        std::lock_guard<std::mutex> lk(g_ghat_mutex);
        auto it = g_ghat_cache.find(key);
        if (it != g_ghat_cache.end()) return it->second;
    }
    PeriodValue pv = gamma_hat(1, word, prec);
    RecognitionResult rec = recognition_ladder(pv.value, word.m, prec);
    std::optional<CycloNumber> out;
    if (rec.verified) out = rec.value;
    std::lock_guard<std::mutex> lk(g_ghat_mutex);
    return g_ghat_cache[key] = out;
}

ActionBlock rho_conjugation_block(const WordOrbit& orbit, mpfr_prec_t prec) {
    ActionBlock blk;
    blk.orbit = orbit;
    blk.u = orbit.m - 1;  // -1 mod m
    blk.coeff.reserve(orbit.members.size());
    for (const auto& beta : orbit.members) {
        // coefficient conj(P-hat(beta)) / P-hat(-beta)
        PeriodValue num = gamma_hat(1, beta, prec);
        PeriodValue den = gamma_hat(1, beta.negated(), prec);
        BigComplex ratio = num.value.conj() / den.value;
        RecognitionResult rec = recognition_ladder(ratio, orbit.m, prec);
        if (!rec.verified)
            throw UnresolvedBlock("conjugation coefficient unresolved for " + beta.str() + ": " + rec.diagnostics);
        blk.coeff.push_back(rec.value);
    }
    return blk;
}

ActionBlock complex_frobenius_block(long p, const WordOrbit& orbit, mpfr_prec_t prec) {
    ActionBlock blk;
    blk.orbit = orbit;
    blk.u = inv_mod(p, orbit.m);
    blk.coeff.reserve(orbit.members.size());
    for (const auto& beta : orbit.members) {
        // Frob_p(Gamma-hat(-p beta)) / Gamma-hat(-beta) with Frobenius acting as
        // sigma_{p^{-1}} on the recognized conductor.
        auto gnum = recognize_gamma_hat(beta.unit_multiple(-p), prec);
        auto gden = recognize_gamma_hat(beta.negated(), prec);
        if (!gnum || !gden)
            throw UnresolvedBlock("complex-route Gamma-hat unresolved for " + beta.str());
        if (gnum->M % p == 0)
            throw UnresolvedBlock("complex-route conductor divisible by p for " + beta.str());
        CycloNumber frob_num = galois_sigma(inv_mod(p, gnum->M), *gnum);
        CycloNumber ratio = frob_num / *gden;
        auto restricted = ratio.restrict_to(orbit.m);
        if (!restricted)
            throw UnresolvedBlock("complex-route coefficient not in Q(zeta_m) for " + beta.str());
        blk.coeff.push_back(*restricted);
    }
    return blk;
}

ActionBlock identity_block(const WordOrbit& orbit) {
    ActionBlock blk;
    blk.orbit = orbit;
    blk.u = 1;
    blk.coeff.assign(orbit.members.size(), CycloNumber::from_rational(1));
    return blk;
}

ActionBlock compose(const ActionBlock& a, const ActionBlock& b) {
    if (!(a.orbit.canonical() == b.orbit.canonical()))
        throw std::invalid_argument("compose: orbit mismatch");
    ActionBlock r;
    r.orbit = a.orbit;
    r.u = mod_lo(a.u * b.u, a.orbit.m);
    r.coeff.reserve(a.coeff.size());
    long ub_inv = inv_mod(b.u, a.orbit.m);
    for (const auto& beta : a.orbit.members) {
        GammaWord mid = beta.unit_multiple(ub_inv);
        r.coeff.push_back(a.coeff_of(mid) * b.coeff_of(beta));
    }
    return r;
}

RhoMatrix rho_identity(long m, const std::vector<WordOrbit>& orbits) {
    RhoMatrix rho;
    rho.m = m;
    rho.handle = GaloisHandle::identity_handle();
    rho.u = 1;
    for (const auto& o : orbits) rho.blocks.push_back(identity_block(o));
    return rho;
}

RhoMatrix rho_frobenius(long m, long p, const std::vector<WordOrbit>& orbits, long k) {
    RhoMatrix rho;
    rho.m = m;
    rho.handle = GaloisHandle::frobenius(p);
    rho.u = inv_mod(p, m);
    for (const auto& o : orbits) rho.blocks.push_back(rho_frobenius_block(p, o, k));
    return rho;
}

RhoMatrix rho_conjugation(long m, const std::vector<WordOrbit>& orbits, mpfr_prec_t prec) {
    RhoMatrix rho;
    rho.m = m;
    rho.handle = GaloisHandle::conjugation();
    rho.u = m - 1;
    for (const auto& o : orbits) rho.blocks.push_back(rho_conjugation_block(o, prec));
    return rho;
}

RhoMatrix compose(const RhoMatrix& a, const RhoMatrix& b) {
    if (a.m != b.m || a.blocks.size() != b.blocks.size())
        throw std::invalid_argument("compose: working sets differ");
    RhoMatrix r;
    r.m = a.m;
    r.handle = GaloisHandle::word(a.handle, b.handle);
    r.u = mod_lo(a.u * b.u, a.m);
    for (size_t i = 0; i < a.blocks.size(); ++i) r.blocks.push_back(compose(a.blocks[i], b.blocks[i]));
    return r;
}

bool rho_equal(const RhoMatrix& a, const RhoMatrix& b) {
    if (a.m != b.m || mod_lo(a.u, a.m) != mod_lo(b.u, b.m) || a.blocks.size() != b.blocks.size()) return false;
    for (size_t i = 0; i < a.blocks.size(); ++i) {
        if (!(a.blocks[i].orbit.canonical() == b.blocks[i].orbit.canonical())) return false;
        for (size_t j = 0; j < a.blocks[i].coeff.size(); ++j)
            if (!(a.blocks[i].coeff[j] == b.blocks[i].coeff[j])) return false;
    }
    return true;
}

long rho_order(const RhoMatrix& rho, long bound) {
    RhoMatrix acc = rho;
    for (long n = 1; n <= bound; ++n) {
        if (acc.is_identity()) return n;
        acc = compose(rho, acc);
    }
    throw std::logic_error("rho_order: bound exceeded");
}

}  // namespace fermatst
