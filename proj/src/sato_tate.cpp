#include "fermatst/sato_tate.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "fermatst/modarith.hpp"
#include "fermatst/numerics.hpp"

namespace fermatst {

IdentityComponent identity_component(long m) {
    EquationLattice L = compute_lattice(m);
    ZMat extra(1, m - 1);
    extra.at(0, 0) = 1;
    extra.at(0, m - 2) = 1;  // delta_1 + delta_{m-1}
    IdentityComponent ic;
    ic.m = m;
    ic.lattice = saturate(lattice_sum(L.basis, extra));
    ic.dimension = (m - 1) - (long)ic.lattice.rows;
    return ic;
}

STContext make_st_context(long m) {
    STContext ctx;
    ctx.m = m;
    ctx.mt = compute_lattice(m);
    ctx.ident = identity_component(m);
    GeneratorSet G = minimal_degree_generators(ctx.mt);
    ctx.N = std::max(2L, G.q);
    ctx.classes = tate_class_basis(ctx.mt, ctx.N);
    std::set<GammaWord> canons;
    for (const auto& e : ctx.classes) canons.insert(word_orbit(char_of_exponent(e)).canonical());
    for (long i = 1; 2 * i < m; ++i) canons.insert(word_orbit(GammaWord(m, {i, m - i})).canonical());
    for (const auto& w : canons) ctx.orbits.push_back(word_orbit(w));
    return ctx;
}

std::vector<CycloNumber> solve_component(const RhoMatrix& rho, const STContext& ctx) {
    const long m = ctx.m;
    const long uprime = inv_mod(rho.u, m);
    // Constraint rows and their values.  The line of a word w transforms
    // with the plain product prod_{i in w} t_i under a generalized
    // permutation h (the dual tensor factors have already been folded into
    // the index set m - j), so the row for a Tate class e is the
    // multiplicity vector of char(e), not the signed vector e.
    ZMat E(0, m - 1);
    E.cols = m - 1;
    std::vector<CycloNumber> values;
    for (const auto& e : ctx.classes) {
        GammaWord w = char_of_exponent(e);
        std::vector<mpz_class> row(m - 1, 0);
        for (long i : w.idx) row[i - 1] += 1;
        E.push_row(row);
        values.push_back(rho.block_for(w).omega_coeff_of(w));
    }
    for (long i = 1; 2 * i < m; ++i) {
        std::vector<mpz_class> row(m - 1, 0);
        row[i - 1] += 1;
        row[m - i - 1] += 1;
        E.push_row(row);
        mpq_class v = mu(m, mod_hi(uprime * i, m)) / mu(m, i);
        v.canonicalize();
        values.push_back(CycloNumber::from_rational(v));
    }

    SmithResult S = smith_normal_form(E);
    for (size_t i = 0; i < S.rank; ++i)
        if (S.D.at(i, i) != 1)
            throw std::logic_error("solve_component: constraint lattice not saturated");

    // w_i = prod_r values_r^{U_{i,r}}
    auto apply_pow = [](const CycloNumber& base, const mpz_class& e) {
        if (!e.fits_slong_p()) throw std::logic_error("solve_component: exponent overflow");
        return base.pow_long(e.get_si());
    };
    std::vector<CycloNumber> w(S.rank, CycloNumber::from_rational(1));
    for (size_t i = 0; i < S.rank; ++i)
        for (size_t r = 0; r < E.rows; ++r)
            if (S.U.at(i, r) != 0) w[i] = w[i] * apply_pow(values[r], S.U.at(i, r));
    // compatibility of dependent constraints
    for (size_t i = S.rank; i < E.rows; ++i) {
        CycloNumber prod = CycloNumber::from_rational(1);
        for (size_t r = 0; r < E.rows; ++r)
            if (S.U.at(i, r) != 0) prod = prod * apply_pow(values[r], S.U.at(i, r));
        if (!(prod == CycloNumber::from_rational(1)))
            throw std::logic_error("solve_component: inconsistent constraints");
    }
    // t_j = prod_i w_i^{V_{j,i}}, free coordinates (i >= rank) set to 1
    std::vector<CycloNumber> t(m - 1, CycloNumber::from_rational(1));
    for (long j = 0; j < m - 1; ++j)
        for (size_t i = 0; i < S.rank; ++i)
            if (S.V.at(j, i) != 0) t[j] = t[j] * apply_pow(w[i], S.V.at(j, i));

    // verify the solution against every constraint
    for (size_t r = 0; r < E.rows; ++r) {
        CycloNumber prod = CycloNumber::from_rational(1);
        for (long j = 0; j < m - 1; ++j)
            if (E.at(r, j) != 0) prod = prod * apply_pow(t[j], E.at(r, j));
        if (!(prod == values[r])) throw std::logic_error("solve_component: constraint verification failed");
    }
    return t;
}

bool in_identity_torus(const std::vector<CycloNumber>& diag, const IdentityComponent& ic) {
    for (size_t r = 0; r < ic.lattice.rows; ++r) {
        CycloNumber prod = CycloNumber::from_rational(1);
        for (long j = 0; j < ic.m - 1; ++j) {
            const mpz_class& e = ic.lattice.at(r, j);
            if (e == 0) continue;
            if (!e.fits_slong_p()) throw std::logic_error("in_identity_torus: exponent overflow");
            prod = prod * diag[j].pow_long(e.get_si());
        }
        if (!(prod == CycloNumber::from_rational(1))) return false;
    }
    return true;
}

namespace {

long find_or_add(std::vector<RhoMatrix>& reps, std::vector<std::string>& witnesses, const RhoMatrix& rho,
                 const std::string& witness) {
    for (size_t i = 0; i < reps.size(); ++i)
        if (rho_equal(reps[i], rho)) return (long)i;
    reps.push_back(rho);
    witnesses.push_back(witness);
    return (long)reps.size() - 1;
}

}  // namespace

STDescription saturate(long m, long prime_budget, long k, mpfr_prec_t prec, int threads) {
    STDescription st;
    st.ctx = make_st_context(m);

    std::vector<RhoMatrix> reps;
    std::vector<std::string> witnesses;
    reps.push_back(rho_identity(m, st.ctx.orbits));
    witnesses.push_back("id");

    try {
        RhoMatrix conj = rho_conjugation(m, st.ctx.orbits, prec);
        find_or_add(reps, witnesses, conj, "conj");
    } catch (const UnresolvedBlock& e) {
        st.notes.push_back(std::string("conjugation block unresolved: ") + e.what());
    }

    auto close_table = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            size_t n = reps.size();
            for (size_t i = 0; i < n && !grew; ++i)
                for (size_t j = 0; j < n && !grew; ++j) {
                    RhoMatrix prod = compose(reps[i], reps[j]);
                    size_t before = reps.size();
                    find_or_add(reps, witnesses, prod, witnesses[i] + "*" + witnesses[j]);
                    if (reps.size() != before) grew = true;
                }
        }
    };
    close_table();

    long primes_tried = 0, stable_streak = 0;
    std::set<long> u_seen;
    for (const auto& r : reps) u_seen.insert(mod_lo(r.u, m));
    for (long p = 3; primes_tried < prime_budget; p += 2) {
        if (!is_prime_long(p) || m % p == 0) continue;
        ++primes_tried;
        RhoMatrix frob = rho_frobenius(m, p, st.ctx.orbits, k);
        size_t before_total = reps.size();
        std::ostringstream w;
        w << "Frob_" << p;
        find_or_add(reps, witnesses, frob, w.str());
        close_table();
        for (const auto& r : reps) u_seen.insert(mod_lo(r.u, m));
        if (reps.size() == before_total)
            ++stable_streak;
        else
            stable_streak = 0;
        bool surjective = (long)u_seen.size() == euler_phi(m);
        if (surjective && stable_streak >= 10) break;
    }
    st.closed = true;  // close_table always runs to fixpoint
    st.u_surjective = (long)u_seen.size() == euler_phi(m);
    st.stable = stable_streak >= 10;
    if (!st.u_surjective || !st.stable)
        st.notes.push_back("prime budget exhausted before the stopping rule was met");

    // canonical order: identity first, then by (u, witness)
    std::vector<size_t> order(reps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (a == 0 || b == 0) return a == 0 && b != 0;
        if (reps[a].u != reps[b].u) return reps[a].u < reps[b].u;
        return witnesses[a] < witnesses[b];
    });
    std::vector<RhoMatrix> sorted_reps;
    std::vector<std::string> sorted_wit;
    for (size_t i : order) {
        sorted_reps.push_back(reps[i]);
        sorted_wit.push_back(witnesses[i]);
    }

    // multiplication table on the sorted representatives
    size_t n = sorted_reps.size();
    st.mult_table.assign(n, std::vector<long>(n, -1));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            RhoMatrix prod = compose(sorted_reps[i], sorted_reps[j]);
            long idx = -1;
            for (size_t t = 0; t < n; ++t)
                if (rho_equal(sorted_reps[t], prod)) { idx = (long)t; break; }
            if (idx < 0) throw std::logic_error("saturate: table not closed");
            st.mult_table[i][j] = idx;
        }

    // orders via the table
    auto order_of = [&](long idx) {
        long cur = idx, n_ord = 1;
        while (cur != 0) {
            cur = st.mult_table[cur][idx];
            ++n_ord;
            if (n_ord > (long)n + 1) throw std::logic_error("saturate: order computation failed");
        }
        return n_ord;
    };

    for (size_t i = 0; i < n; ++i) {
        ComponentDescription cd;
        cd.index = (long)i;
        cd.u = mod_lo(sorted_reps[i].u, m);
        cd.rho = sorted_reps[i];
        cd.rep = solve_component(sorted_reps[i], st.ctx);
        cd.order = order_of((long)i);
        cd.witness = sorted_wit[i];
        st.components.push_back(std::move(cd));
    }
    (void)threads;
    return st;
}

namespace {

template <typename Entry>
std::optional<std::pair<long, std::vector<Entry>>> gen_perm_data(const std::vector<std::vector<Entry>>& h, long m,
                                                                 const std::function<bool(const Entry&)>& is_zero) {
    if ((long)h.size() != m - 1) return std::nullopt;
    std::vector<long> row_of(m, 0);  // 1-based by column
    for (long j = 1; j < m; ++j) {
        if ((long)h[j - 1].size() != m - 1) return std::nullopt;
        long nz = 0, row = 0;
        for (long r = 1; r < m; ++r)
            if (!is_zero(h[r - 1][j - 1])) { ++nz; row = r; }
        if (nz != 1) return std::nullopt;
        row_of[j] = row;
    }
    // shape must be j -> [u^{-1} j]: u determined by the image of 1
    long v = row_of[1];
    if (!is_unit_mod(v, m)) return std::nullopt;
    for (long j = 1; j < m; ++j)
        if (row_of[j] != mod_lo(v * j, m)) return std::nullopt;
    long u = inv_mod(v, m);
    std::vector<Entry> t;
    for (long j = 1; j < m; ++j) t.push_back(h[row_of[j] - 1][j - 1]);
    return std::make_pair(u, t);
}

}  // namespace

MembershipResult membership(const std::vector<std::vector<CycloNumber>>& h, const STDescription& st) {
    MembershipResult res;
    const long m = st.ctx.m;
    std::function<bool(const CycloNumber&)> isz = [](const CycloNumber& x) { return x.is_zero(); };
    auto data = gen_perm_data<CycloNumber>(h, m, isz);
    if (!data) {
        res.reason = "not a generalized permutation matrix of monodromy shape";
        return res;
    }
    auto [u, t] = *data;
    for (const auto& comp : st.components) {
        if (comp.u != u) continue;
        // ratio against the component representative must lie in the torus
        std::vector<CycloNumber> ratio(m - 1);
        bool ok = true;
        for (long j = 0; j < m - 1 && ok; ++j) {
            if (comp.rep[j].is_zero()) { ok = false; break; }
            ratio[j] = t[j] / comp.rep[j];
        }
        if (ok && in_identity_torus(ratio, st.ctx.ident)) {
            res.accepted = true;
            res.component = comp.index;
            return res;
        }
    }
    res.reason = "matches no component";
    return res;
}

MembershipResult membership_numeric(const std::vector<std::vector<BigComplex>>& h, const STDescription& st,
                                    mpfr_prec_t prec) {
    MembershipResult res;
    const long m = st.ctx.m;
    std::function<bool(const BigComplex&)> isz = [&](const BigComplex& z) {
        return z.abs().cmp(BigFloat::from_long(1, prec).mul_2exp(-(long)prec / 2)) < 0;
    };
    auto data = gen_perm_data<BigComplex>(h, m, isz);
    if (!data) {
        res.reason = "not a generalized permutation matrix of monodromy shape";
        return res;
    }
    auto [u, t] = *data;
    long uprime = inv_mod(u, m);
    for (const auto& comp : st.components) {
        if (comp.u != u) continue;
        bool all = true;
        // polarization multiplier: t_i t_{m-i} = mu_{[u' i]} / mu_i
        for (long i = 1; 2 * i < m && all; ++i) {
            BigComplex lhs = t[i - 1] * t[m - i - 1];
            mpq_class v = mu(m, mod_hi(uprime * i, m)) / mu(m, i);
            v.canonicalize();
            if (!close_abs_rel(lhs, BigComplex::from_mpq(v, prec), (long)prec / 2)) all = false;
        }
        for (const auto& e : st.ctx.classes) {
            if (!all) break;
            // induced scalar on the line of char(e)
            GammaWord w = char_of_exponent(e);
            BigComplex lhs = BigComplex::from_mpq(1, prec);
            for (long i : w.idx) lhs = lhs * t[i - 1];
            BigComplex rhs = embed_complex(comp.rho.block_for(w).omega_coeff_of(w), prec);
            if (!close_abs_rel(lhs, rhs, (long)prec / 2)) all = false;
        }
        if (all) {
            res.accepted = true;
            res.component = comp.index;
            return res;
        }
    }
    res.reason = "matches no component";
    return res;
}

}  // namespace fermatst
