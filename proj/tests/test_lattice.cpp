#include <doctest.h>

#include <functional>
#include <set>

#include "fermatst/lattice.hpp"
#include "fermatst/modarith.hpp"

using namespace fermatst;

namespace {

ExponentVector delta(long m, std::initializer_list<std::pair<long, long>> terms) {
    std::vector<long> e(m - 1, 0);
    for (auto [j, c] : terms) e[j - 1] += c;
    return ExponentVector(m, e);
}

// enumerate all e with ||e||_1 <= bound, sum 0
void for_all_balanced(long m, long bound, const std::function<void(const ExponentVector&)>& f) {
    std::vector<long> e(m - 1, 0);
    std::function<void(long, long, long)> rec = [&](long pos, long sum, long norm) {
        if (pos == m - 1) {
            if (sum == 0) {
                ExponentVector v(m, e);
                if (!v.is_zero()) f(v);
            }
            return;
        }
        for (long x = -bound + norm; x <= bound - norm; ++x) {
            e[pos] = x;
            rec(pos + 1, sum + x, norm + std::abs(x));
        }
        e[pos] = 0;
    };
    rec(0, 0, 0);
}

}  // namespace

TEST_CASE("char_of_exponent") {
    ExponentVector e = delta(15, {{9, 1}, {12, 1}, {8, -1}, {13, -1}});
    CHECK(char_of_exponent(e) == GammaWord(15, {9, 12, 7, 2}));
    CHECK_THROWS_AS(char_of_exponent(delta(5, {{1, 0}})), std::invalid_argument);
    ExponentVector e2 = delta(5, {{1, 1}, {4, 1}, {2, -1}, {3, -1}});
    CHECK(char_of_exponent(e2) == GammaWord(5, {1, 4, 3, 2}));
}

TEST_CASE("is_mt_equation examples") {
    CHECK(is_mt_equation(delta(15, {{9, 1}, {12, 1}, {8, -1}, {13, -1}})));
    CHECK_FALSE(is_mt_equation(delta(15, {{1, 1}, {2, -1}})));
    for (long i = 1; i < 15; ++i)
        for (long j = 1; j < 15; ++j) {
            if (i == j || i + j == 15) continue;
            ExponentVector e = delta(15, {{i, 1}, {15 - i, 1}, {j, -1}, {15 - j, -1}});
            if (!e.is_zero()) CHECK(is_mt_equation(e));
        }
}

TEST_CASE("compute_lattice small moduli") {
    EquationLattice L3 = compute_lattice(3);
    CHECK(L3.rank() == 0);

    EquationLattice L5 = compute_lattice(5);
    CHECK(L5.rank() == 1);
    CHECK(L5.contains(delta(5, {{1, 1}, {4, 1}, {2, -1}, {3, -1}})));

    EquationLattice L15 = compute_lattice(15);
    CHECK(L15.rank() == 9);
    CHECK(L15.contains(delta(15, {{9, 1}, {12, 1}, {8, -1}, {13, -1}})));
    CHECK(L15.contains(delta(15, {{11, 1}, {12, 1}, {9, -1}, {14, -1}})));
    CHECK(L15.contains(delta(15, {{10, 1}, {12, 1}, {8, -1}, {14, -1}})));
}

TEST_CASE("brute-force oracle: membership matches the direct definition") {
    for (long m : {3L, 5L, 7L, 9L}) {
        EquationLattice L = compute_lattice(m);
        for_all_balanced(m, 6, [&](const ExponentVector& v) {
            CHECK(L.contains(v) == is_mt_equation(v));
        });
    }
    // m = 15 with a smaller norm budget (the search space grows quickly)
    EquationLattice L15 = compute_lattice(15);
    for_all_balanced(15, 4, [&](const ExponentVector& v) {
        CHECK(L15.contains(v) == is_mt_equation(v));
    });
}

TEST_CASE("lattice saturation") {
    for (long m : {5L, 9L, 15L}) {
        EquationLattice L = compute_lattice(m);
        CHECK(lattice_equal(saturate(L.basis), L.basis));
    }
}

TEST_CASE("minimal degree generators") {
    EquationLattice L3 = compute_lattice(3);
    GeneratorSet G3 = minimal_degree_generators(L3);
    CHECK(G3.q == 2);
    CHECK(G3.generators.empty());

    for (long m : {5L, 7L, 15L}) {
        EquationLattice L = compute_lattice(m);
        GeneratorSet G = minimal_degree_generators(L);
        CHECK(G.q == 2);
        ZMat S(0, m - 1);
        S.cols = m - 1;
        for (const auto& g : G.generators) {
            CHECK(g.positive_degree() <= G.q);
            CHECK(L.contains(g));
            S.push_row(g.as_mpz());
        }
        CHECK(lattice_equal(S, L.basis));
    }
}

TEST_CASE("tate_class_basis") {
    EquationLattice L5 = compute_lattice(5);
    auto basis5 = tate_class_basis(L5, 2);
    CHECK(basis5.size() == 2);  // +/- the single generator
    for (const auto& v : basis5) CHECK(is_mt_equation(v));

    EquationLattice L15 = compute_lattice(15);
    auto basis15 = tate_class_basis(L15, 2);
    std::set<ExponentVector> set15(basis15.begin(), basis15.end());
    CHECK(set15.count(delta(15, {{9, 1}, {12, 1}, {8, -1}, {13, -1}})));
    CHECK(set15.count(delta(15, {{11, 1}, {12, 1}, {9, -1}, {14, -1}})));
    CHECK(set15.count(delta(15, {{10, 1}, {12, 1}, {8, -1}, {14, -1}})));
    for (long i = 1; i < 15; ++i)
        for (long j = 1; j < 15; ++j) {
            if (i == j || i + j == 15 || 15 - i == j) continue;
            ExponentVector e = delta(15, {{i, 1}, {15 - i, 1}, {j, -1}, {15 - j, -1}});
            if (!e.is_zero()) CHECK(set15.count(e));
        }
    for (const auto& v : basis15) {
        CHECK(v.positive_degree() <= 2);
        CHECK(L15.contains(v));
    }
}
