#include <doctest.h>

#include "fermatst/galois.hpp"
#include "fermatst/modarith.hpp"

using namespace fermatst;

namespace {
const mpfr_prec_t P = 512;
}

TEST_CASE("shape_of") {
    auto s8 = shape_of(8, 15);  // 8^{-1} = 2 mod 15
    CHECK(s8[0] == 2);
    CHECK(s8[1] == 4);
    auto s1 = shape_of(1, 15);
    for (long j = 1; j < 15; ++j) CHECK(s1[j - 1] == j);
    // composition law
    for (long u : units_mod(15))
        for (long v : units_mod(15)) {
            auto su = shape_of(u, 15), sv = shape_of(v, 15), suv = shape_of(mod_lo(u * v, 15), 15);
            for (long j = 1; j < 15; ++j) CHECK(su[sv[j - 1] - 1] == suv[j - 1]);
        }
}

TEST_CASE("m=3 frobenius blocks by hand") {
    WordOrbit orbit = word_orbit(GammaWord(3, {1, 2}));
    REQUIRE(orbit.members.size() == 1);  // {1,2} is fixed by both units

    ActionBlock b5 = rho_frobenius_block(5, orbit, 20);
    CHECK(b5.u == 2);
    CHECK(b5.coeff[0] == CycloNumber::from_rational(-1));

    ActionBlock b7 = rho_frobenius_block(7, orbit, 20);
    CHECK(b7.u == 1);
    CHECK(b7.coeff[0] == CycloNumber::from_rational(1));

    // any p = 1 mod m gives a diagonal block
    ActionBlock b13 = rho_frobenius_block(13, orbit, 20);
    CHECK(b13.u == 1);
}

TEST_CASE("m=3 conjugation block by hand") {
    WordOrbit orbit = word_orbit(GammaWord(3, {1, 2}));
    ActionBlock c = rho_conjugation_block(orbit, P);
    CHECK(c.u == 2);
    CHECK(c.coeff[0] == CycloNumber::from_rational(-1));
    // involution
    ActionBlock sq = compose(c, c);
    CHECK(sq.is_identity());
}

TEST_CASE("conjugation blocks square to the identity") {
    for (long m : {5L, 15L}) {
        WordOrbit orbit = word_orbit(GammaWord(m, {1, m - 1}));
        ActionBlock c = rho_conjugation_block(orbit, P);
        CHECK(compose(c, c).is_identity());
    }
    WordOrbit o15 = word_orbit(GammaWord(15, {9, 12, 7, 2}));
    ActionBlock c15 = rho_conjugation_block(o15, P);
    CHECK(compose(c15, c15).is_identity());
}

TEST_CASE("compose and finite order") {
    WordOrbit orbit = word_orbit(GammaWord(3, {1, 2}));
    std::vector<WordOrbit> orbits{orbit};
    RhoMatrix f5 = rho_frobenius(3, 5, orbits, 20);
    RhoMatrix id = rho_identity(3, orbits);
    CHECK(rho_equal(compose(f5, id), f5));
    RhoMatrix sq = compose(f5, f5);
    CHECK(sq.is_identity());
    CHECK(rho_order(f5, 10) == 2);
}

TEST_CASE("blocks have generalized permutation shape and finite order") {
    for (long p : {7L, 11L, 13L}) {
        WordOrbit orbit = word_orbit(GammaWord(15, {9, 12, 7, 2}));
        ActionBlock b = rho_frobenius_block(p, orbit, 20);
        // coefficient count matches orbit size; all nonzero
        CHECK(b.coeff.size() == orbit.members.size());
        for (const auto& c : b.coeff) CHECK(!c.is_zero());
        // finite order within a generous bound
        ActionBlock acc = b;
        bool hit_identity = false;
        for (int n = 1; n <= 64; ++n) {
            if (acc.is_identity()) { hit_identity = true; break; }
            acc = compose(b, acc);
        }
        CHECK(hit_identity);
    }
}

TEST_CASE("normalization round trip: P-hat to omega and back") {
    WordOrbit orbit = word_orbit(GammaWord(15, {9, 12, 7, 2}));
    ActionBlock b = rho_frobenius_block(7, orbit, 20);
    long uprime = inv_mod(b.u, 15);
    for (const auto& beta : orbit.members) {
        CycloNumber omega = b.omega_coeff_of(beta);
        mpq_class ratio = basis_scale_E(beta.unit_multiple(uprime)) / basis_scale_E(beta);
        CycloNumber back = omega / CycloNumber::from_rational(ratio);
        CHECK(back == b.coeff_of(beta));
    }
}

TEST_CASE("frobenius blocks are stable in the precision k") {
    WordOrbit orbit = word_orbit(GammaWord(15, {1, 14}));
    ActionBlock a = rho_frobenius_block(7, orbit, 20);
    ActionBlock b = rho_frobenius_block(7, orbit, 25);
    REQUIRE(a.coeff.size() == b.coeff.size());
    for (size_t i = 0; i < a.coeff.size(); ++i) CHECK(a.coeff[i] == b.coeff[i]);
}

TEST_CASE("antidiagonal lines carry the polarization multiplier") {
    // omega-basis coefficient on the {i, m-i} line must equal mu_{[u' i]}/mu_i
    for (long m : {3L, 5L, 15L}) {
        for (long p : {7L, 11L}) {
            if (m % p == 0) continue;
            long uprime = mod_lo(p, m);  // u = p^{-1}, u' = u^{-1} = p
            for (long i = 1; 2 * i < m; ++i) {
                WordOrbit orbit = word_orbit(GammaWord(m, {i, m - i}));
                ActionBlock b = rho_frobenius_block(p, orbit, 20);
                GammaWord beta(m, {i, m - i});
                CycloNumber omega = b.omega_coeff_of(beta);
                mpq_class expect = mu(m, mod_hi(uprime * i, m)) / mu(m, i);
                expect.canonicalize();
                CHECK(omega == CycloNumber::from_rational(expect));
            }
        }
    }
}

TEST_CASE("split primes: p-adic route equals the complex route") {
    struct Case { long m, p; };
    for (auto [m, p] : {Case{3, 7}, Case{3, 13}, Case{5, 11}, Case{15, 31}}) {
        for (const auto& seed : {GammaWord(m, {1, m - 1})}) {
            WordOrbit orbit = word_orbit(seed);
            ActionBlock padic = rho_frobenius_block(p, orbit, 20);
            ActionBlock cplx = complex_frobenius_block(p, orbit, P);
            REQUIRE(padic.coeff.size() == cplx.coeff.size());
            CHECK(padic.u == cplx.u);
            for (size_t i = 0; i < padic.coeff.size(); ++i) CHECK(padic.coeff[i] == cplx.coeff[i]);
        }
    }
}
