#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace fermatst {

// Dense integer matrix, row major.  Rows usually span a lattice.
struct ZMat {
    size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;

    ZMat() = default;
    ZMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    mpz_class& at(size_t r, size_t c) { return a[r * cols + c]; }
    const mpz_class& at(size_t r, size_t c) const { return a[r * cols + c]; }

    std::vector<mpz_class> row(size_t r) const {
        return std::vector<mpz_class>(a.begin() + r * cols, a.begin() + (r + 1) * cols);
    }
    void push_row(const std::vector<mpz_class>& v);
    bool operator==(const ZMat&) const = default;

    static ZMat identity(size_t n);
    static ZMat from_rows(const std::vector<std::vector<long>>& rows, size_t cols);
};

// Row-style Hermite normal form: echelon, positive pivots, entries above a
// pivot reduced into [0, pivot).  Zero rows are dropped, so the result is a
// canonical basis of the row lattice.
ZMat hnf(const ZMat& A);

size_t lattice_rank(const ZMat& A);

// Basis of the right kernel {x : A x = 0} as rows.  The integer kernel of a
// matrix is automatically saturated.
ZMat kernel(const ZMat& A);

// Saturation of the row lattice: (Q-span of rows) intersected with Z^cols.
ZMat saturate(const ZMat& A);

// hnf of the stacked rows of A and B (lattice sum).
ZMat lattice_sum(const ZMat& A, const ZMat& B);

// Membership of v in the row lattice of H, where H must be in HNF.
bool hnf_contains(const ZMat& H, const std::vector<mpz_class>& v);

bool lattice_equal(const ZMat& A, const ZMat& B);

// Smith normal form: returns D and unimodular U (rows x rows), V (cols x
// cols) with U * A * V = D, D diagonal with d_1 | d_2 | ...
struct SmithResult {
    ZMat U, D, V;
    size_t rank = 0;
};
SmithResult smith_normal_form(const ZMat& A);

// Solve x * H = v over Z for H in HNF (x has one entry per row of H).
std::optional<std::vector<mpz_class>> hnf_solve(const ZMat& H, const std::vector<mpz_class>& v);

}  // namespace fermatst
