#pragma once

#include "fermatst/characters.hpp"
#include "fermatst/intmatrix.hpp"

namespace fermatst {

// Exponent vector of a Laurent monomial prod_j x_j^{e_j}, j = 1..m-1.
struct ExponentVector {
    long m = 0;
    std::vector<long> e;  // length m-1, index j-1 holds the exponent of x_j

    ExponentVector() = default;
    ExponentVector(long m_, std::vector<long> e_);

    bool is_zero() const;
    long positive_degree() const;  // q = sum of positive exponents
    long coordinate_sum() const;
    std::vector<mpz_class> as_mpz() const;

    bool operator==(const ExponentVector&) const = default;
    auto operator<=>(const ExponentVector&) const = default;
    std::string str() const;
};

// gamma_f: j with e_j > 0 contributes gamma_j e_j times, j with e_j < 0
// contributes gamma_{m-j} |e_j| times.
GammaWord char_of_exponent(const ExponentVector& e);

bool is_mt_equation(const ExponentVector& e);

struct EquationLattice {
    long m = 0;
    ZMat basis;  // HNF rows spanning the lattice in Z^{m-1}
    size_t rank() const { return basis.rows; }
    bool contains(const ExponentVector& e) const;
};

// Lattice of all balanced exponent vectors whose character has constant
// weight; computed as an exact integer kernel (hence saturated).
EquationLattice compute_lattice(long m);

struct GeneratorSet {
    std::vector<ExponentVector> generators;
    long q = 0;  // max over generators of the positive-exponent sum
};

// Generating set minimizing the maximal positive-exponent sum q; for the
// zero lattice returns q = 2 with no generators.
GeneratorSet minimal_degree_generators(const EquationLattice& L);

// All e in L with positive degree <= n (and e != 0), sorted.
std::vector<ExponentVector> tate_class_basis(const EquationLattice& L, long n);

}  // namespace fermatst
