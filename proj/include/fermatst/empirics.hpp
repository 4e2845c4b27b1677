#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fermatst/cyclotomic.hpp"
#include "fermatst/lattice.hpp"

namespace fermatst {

struct CurveCount {
    long m = 0;
    mpq_class a;
    long p = 0;
    long f = 1;
    long count = 0;  // projective points of the smooth model over F_{p^f}
};

// Exhaustive projective point count of y^2 = x^m + a over F_{p^f}.
CurveCount point_count(long m, const mpq_class& a, long p, long f);

struct EigenvalueData {
    long m = 0;
    mpq_class a;
    long p = 0;
    long f = 1;
    std::vector<CycloNumber> eig;  // index j-1 holds the Frobenius eigenvalue on the v_j line
};

// Frobenius eigenvalues over F_{p^f} (p^f = 1 mod m) via quadratic-times-
// order-m character sums, validated against the point count and the Weil
// pairing before returning.
EigenvalueData frobenius_eigenvalues(long m, const mpq_class& a, long p, long f);

// Compare the unitarized product of point-count eigenvalues over the class
// of e with the diagonal of rho(Frob_p)^f from the Gamma-period route;
// f = order of p mod m so the class line is Frobenius-stable.
bool tate_eigenvalue_check(long m, const mpq_class& a, long p, const ExponentVector& e, long k);

struct TwistCheckRow {
    long p = 0;
    long f = 1;
    std::vector<bool> outcomes_a;
    std::vector<bool> outcomes_1;
    bool agree = true;
};

struct TwistReport {
    long m = 0;
    mpq_class a;
    long p_bound = 0;
    std::vector<TwistCheckRow> rows;
    bool all_agree = true;
};

// Theorem-level invariance check: per-class outcomes for C_{m,a} must match
// those for C_{m,1} at every good prime below the bound.
TwistReport twist_invariance(long m, const mpq_class& a, long p_bound, long k, long qf_cap = 10000000);

}  // namespace fermatst
