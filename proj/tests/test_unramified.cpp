#include <doctest.h>

#include <random>

#include "fermatst/modarith.hpp"
#include "fermatst/unramified.hpp"

using namespace fermatst;

TEST_CASE("frobenius place construction") {
    // p=7 splits in Q(zeta_3): linear factor, root is a cube root of unity mod 7^k
    FrobeniusPlace pl = frobenius_place(7, 3, 10);
    CHECK(pl.f == 1);
    CHECK(pl.factor.size() == 2);
    // the root r = -c satisfies r^2 + r + 1 = 0 mod 7^10
    mpz_class mod = pow_long(7, 10);
    mpz_class r = (mod - pl.factor[0]) % mod;
    CHECK((r * r + r + 1) % mod == 0);

    // p=5 is inert in Q(zeta_3)
    FrobeniusPlace pl5 = frobenius_place(5, 3, 8);
    CHECK(pl5.f == 2);

    CHECK_THROWS_AS(frobenius_place(5, 15, 8), std::invalid_argument);
    CHECK_THROWS_AS(frobenius_place(2, 15, 8), std::invalid_argument);
}

TEST_CASE("hensel consistency across precisions") {
    for (long k : {4L, 8L, 16L}) {
        FrobeniusPlace a = frobenius_place(7, 15, k);
        FrobeniusPlace b = frobenius_place(7, 15, k + 5);
        mpz_class mod = pow_long(7, k);
        REQUIRE(a.factor.size() == b.factor.size());
        for (size_t i = 0; i < a.factor.size(); ++i) CHECK((a.factor[i] - b.factor[i]) % mod == 0);
    }
}

TEST_CASE("frobenius unit") {
    FrobeniusPlace p1 = frobenius_place(7, 3, 4);
    CHECK(frobenius_unit(p1) == 1);
    FrobeniusPlace p2 = frobenius_place(5, 3, 4);
    CHECK(frobenius_unit(p2) == 2);
    FrobeniusPlace p3 = frobenius_place(17, 15, 4);  // 17 = 2 mod 15, 2^{-1} = 8
    CHECK(frobenius_unit(p3) == 8);
    p3.geometric = false;
    CHECK(frobenius_unit(p3) == 2);
}

TEST_CASE("embedding is a ring homomorphism") {
    std::mt19937_64 rng(606);
    FrobeniusPlace pl = frobenius_place(7, 15, 12);
    auto rand_cyclo = [&](long h) {
        std::vector<mpq_class> c(euler_phi(15));
        for (auto& x : c) {
            long den = 1 + (long)(rng() % h);
            while (den % 7 == 0) ++den;
            x = mpq_class((long)(rng() % (2 * h + 1)) - h, den);
            x.canonicalize();
        }
        return CycloNumber(15, c);
    };
    for (int iter = 0; iter < 10; ++iter) {
        CycloNumber a = rand_cyclo(5), b = rand_cyclo(5);
        UnramifiedElement ea = embed_cyclotomic_padic(a, pl);
        UnramifiedElement eb = embed_cyclotomic_padic(b, pl);
        CHECK(embed_cyclotomic_padic(a * b, pl) == ea * eb);
        CHECK(embed_cyclotomic_padic(a + b, pl) == ea + eb);
    }
    // rationals map to rationals
    UnramifiedElement r = embed_cyclotomic_padic(CycloNumber::from_rational(mpq_class(3, 4), 15), pl);
    UnramifiedElement expect = UnramifiedElement::from_padic(PadicInt::from_rational(mpq_class(3, 4), 7, 12), pl);
    CHECK(r == expect);
    // zeta_m maps to a root of Phi_m
    UnramifiedElement z = embed_cyclotomic_padic(CycloNumber::zeta(15), pl);
    UnramifiedElement acc = UnramifiedElement::from_padic(PadicInt(7, 12, 0), pl);
    const auto& phi = cyclotomic_polynomial(15);
    for (long i = (long)phi.size() - 1; i >= 0; --i) {
        acc = acc * z + UnramifiedElement::from_padic(PadicInt(7, 12, phi[i]), pl);
    }
    CHECK(acc == UnramifiedElement::from_padic(PadicInt(7, 12, 0), pl));
}

TEST_CASE("frobenius compatibility on the residue field") {
    // sigma_p on zeta matches the p-power map modulo p
    for (long p : {7L, 11L}) {
        FrobeniusPlace pl = frobenius_place(p, 15, 6);
        CycloNumber z = CycloNumber::zeta(15);
        UnramifiedElement lhs = embed_cyclotomic_padic(galois_sigma(mod_lo(p, 15), z), pl);
        UnramifiedElement rhs = embed_cyclotomic_padic(z, pl);
        // rhs^p mod p
        UnramifiedElement acc = rhs;
        for (long i = 1; i < p; ++i) acc = acc * rhs;
        CHECK(lhs.congruent_mod(acc, 1));
    }
}

TEST_CASE("padic recognition round trips") {
    FrobeniusPlace pl = frobenius_place(7, 3, 20);
    CycloNumber x = CycloNumber::zeta(3) + CycloNumber::from_rational(mpq_class(1, 2), 3);
    UnramifiedElement y = embed_cyclotomic_padic(x, pl);
    PadicRecognition rec = recognize_padic(y, 1000);
    REQUIRE(rec.verified);
    CHECK(rec.value == x);

    UnramifiedElement neg = embed_cyclotomic_padic(CycloNumber::from_rational(-1, 3), pl);
    PadicRecognition rec2 = recognize_padic(neg, 1000);
    REQUIRE(rec2.verified);
    CHECK(rec2.value == CycloNumber::from_rational(-1, 3));
}

TEST_CASE("random residues are rejected at small height bounds") {
    std::mt19937_64 rng(808);
    FrobeniusPlace pl = frobenius_place(5, 3, 20);
    int hits = 0;
    for (int iter = 0; iter < 10; ++iter) {
        UnramifiedElement y = UnramifiedElement::from_padic(PadicInt(5, 20, mpz_class(rng())), pl);
        // random second coordinate too
        y.c[1] = mpz_class(rng()) % pow_long(5, 20);
        PadicRecognition rec = recognize_padic(y, 10);
        if (rec.verified) ++hits;
    }
    CHECK(hits == 0);
}

TEST_CASE("uniqueness threshold is enforced") {
    FrobeniusPlace pl = frobenius_place(5, 3, 4);
    UnramifiedElement y = UnramifiedElement::from_padic(PadicInt(5, 4, 7), pl);
    PadicRecognition rec = recognize_padic(y, 1000000);
    CHECK_FALSE(rec.verified);
    CHECK(rec.diagnostics.find("threshold") != std::string::npos);
}
