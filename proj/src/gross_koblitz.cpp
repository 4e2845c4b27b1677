#include "fermatst/gross_koblitz.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "fermatst/galois.hpp"
#include "fermatst/lattice.hpp"
#include "fermatst/modarith.hpp"
#include "fermatst/numerics.hpp"
#include "fermatst/unramified.hpp"

namespace fermatst {

std::string GKReport::verdict_str() const {
    switch (verdict) {
        case GKVerdict::verified: return "verified";
        case GKVerdict::failed: return "failed";
        case GKVerdict::unresolved: return "unresolved";
    }
    return "?";
}

GKReport gk_verify(const GammaWord& alpha, long p, long k, mpfr_prec_t prec) {
    const long m = alpha.m;
    GKReport rep;
    rep.m = m;
    rep.alpha = alpha;
    rep.p = p;
    rep.k = k;
    rep.prec = prec;

    if (m % p == 0 || p == 2 || !is_prime_long(p))
        throw std::invalid_argument("gk_verify: p must be an odd prime not dividing m");
    if (!is_tate_word(alpha))
        throw std::invalid_argument("gk_verify: character weight is not constant");

    long wt = weight_integer(alpha);
    PadicInt ghp = gamma_hat_p(mod_lo(p, m), alpha, p, k);
    rep.rhs = (wt % 2 == 0) ? ghp : -ghp;

    auto g_ma = recognize_gamma_hat(alpha.negated(), prec);          // Gamma-hat(-alpha)
    auto g_mpa = recognize_gamma_hat(alpha.unit_multiple(-p), prec); // Gamma-hat(-p alpha)
    if (!g_ma || !g_mpa) {
        rep.verdict = GKVerdict::unresolved;
        rep.diagnostics = "recognition ladder exhausted on a Gamma-hat value";
        return rep;
    }
    if (g_mpa->M % p == 0 || g_ma->M % p == 0) {
        rep.verdict = GKVerdict::unresolved;
        rep.diagnostics = "recognized conductor divisible by p";
        return rep;
    }

    // geometric Frobenius acts on the abelian field by zeta -> zeta^{1/p}
    CycloNumber frob_g = galois_sigma(inv_mod(p, g_mpa->M), *g_mpa);
    CycloNumber lhs = (*g_ma / frob_g).lift_to(std::lcm(std::lcm(g_ma->M, g_mpa->M), m));
    rep.lhs = lhs;
    rep.lhs_known = true;

    FrobeniusPlace place = frobenius_place(p, lhs.M, k);
    // clear denominators: compare embed(lhs * d) with rhs * d mod p^k
    mpz_class den = 1;
    for (const auto& c : lhs.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    CycloNumber scaled = lhs * CycloNumber::from_rational(mpq_class(den));
    UnramifiedElement left = embed_cyclotomic_padic(scaled, place);
    PadicInt right = rep.rhs * PadicInt(p, k, den);
    UnramifiedElement rightu = UnramifiedElement::from_padic(right, place);
    bool match = left.congruent_mod(rightu, k);
    if (den % p == 0) rep.diagnostics = "coefficient denominator divisible by p; comparison weakened";
    rep.verdict = match ? GKVerdict::verified : GKVerdict::failed;
    return rep;
}

std::vector<GammaWord> gk_character_source(long m) {
    std::set<GammaWord> words;
    for (long i = 1; 2 * i < m; ++i) words.insert(GammaWord(m, {i, m - i}));
    EquationLattice L = compute_lattice(m);
    if (L.rank() > 0) {
        GeneratorSet G = minimal_degree_generators(L);
        for (const auto& g : G.generators) words.insert(char_of_exponent(g));
    }
    return std::vector<GammaWord>(words.begin(), words.end());
}

std::vector<GKReport> gk_sweep(long m, long p_bound, long k, mpfr_prec_t prec, int threads) {
    std::vector<GammaWord> words = gk_character_source(m);
    std::vector<long> primes;
    for (long p : primes_below(p_bound))
        if (p != 2 && m % p != 0) primes.push_back(p);

    struct Task { GammaWord w; long p; };
    std::vector<Task> tasks;
    for (const auto& w : words)
        for (long p : primes) tasks.push_back({w, p});

    std::vector<GKReport> reports(tasks.size());
    if (threads <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) reports[i] = gk_verify(tasks[i].w, tasks[i].p, k, prec);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    reports[i] = gk_verify(tasks[i].w, tasks[i].p, k, prec);
            });
        for (auto& th : pool) th.join();
    }
    std::stable_sort(reports.begin(), reports.end(), [](const GKReport& a, const GKReport& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.p < b.p;
    });
    return reports;
}

}  // namespace fermatst
