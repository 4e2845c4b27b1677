#include "fermatst/intmatrix.hpp"

#include <stdexcept>

namespace fermatst {

void ZMat::push_row(const std::vector<mpz_class>& v) {
    if (rows == 0 && cols == 0) cols = v.size();
    if (v.size() != cols) throw std::invalid_argument("ZMat::push_row: wrong length");
    a.insert(a.end(), v.begin(), v.end());
    ++rows;
}

ZMat ZMat::identity(size_t n) {
    ZMat I(n, n);
    for (size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

ZMat ZMat::from_rows(const std::vector<std::vector<long>>& rows_, size_t cols_) {
    ZMat A(rows_.size(), cols_);
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != cols_) throw std::invalid_argument("ZMat::from_rows: ragged input");
        for (size_t c = 0; c < cols_; ++c) A.at(r, c) = rows_[r][c];
    }
    return A;
}

namespace {

void swap_rows(ZMat& A, size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
}

// row_i -= q * row_j
void submul_row(ZMat& A, size_t i, size_t j, const mpz_class& q) {
    if (q == 0) return;
    for (size_t c = 0; c < A.cols; ++c) A.at(i, c) -= q * A.at(j, c);
}

void negate_row(ZMat& A, size_t i) {
    for (size_t c = 0; c < A.cols; ++c) A.at(i, c) = -A.at(i, c);
}

// In-place row HNF; returns pivot columns.  Works left to right, clearing
// each column below the pivot by gcd steps, then reduces entries above.
std::vector<size_t> hnf_inplace(ZMat& A) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < A.cols && r < A.rows; ++c) {
        // gcd-eliminate below row r in column c
        while (true) {
            size_t best = r;
            bool found = false;
            for (size_t i = r; i < A.rows; ++i) {
                if (A.at(i, c) != 0) {
                    if (!found || mpz_cmpabs(A.at(i, c).get_mpz_t(), A.at(best, c).get_mpz_t()) < 0) {
                        best = i;
                        found = true;
                    }
                }
            }
            if (!found) break;
            swap_rows(A, r, best);
            if (A.at(r, c) < 0) negate_row(A, r);
            bool cleared = true;
            for (size_t i = r + 1; i < A.rows; ++i) {
                if (A.at(i, c) != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), A.at(i, c).get_mpz_t(), A.at(r, c).get_mpz_t());
                    submul_row(A, i, r, q);
                    if (A.at(i, c) != 0) cleared = false;
                }
            }
            if (cleared) break;
        }
        if (A.at(r, c) != 0) {
            // reduce entries above the pivot into [0, pivot)
            for (size_t i = 0; i < r; ++i) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), A.at(i, c).get_mpz_t(), A.at(r, c).get_mpz_t());
                submul_row(A, i, r, q);
            }
            pivots.push_back(c);
            ++r;
        }
    }
    A.rows = r;  // drop zero rows
    A.a.resize(r * A.cols);
    return pivots;
}

}  // namespace

ZMat hnf(const ZMat& A) {
    ZMat B = A;
    hnf_inplace(B);
    return B;
}

size_t lattice_rank(const ZMat& A) { return hnf(A).rows; }

ZMat kernel(const ZMat& A) {
    // Row-reduce [A^T | I]; rows whose A^T part vanishes give the kernel.
    size_t n = A.cols;
    ZMat W(n, A.rows + n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < A.rows; ++j) W.at(i, j) = A.at(j, i);
        W.at(i, A.rows + i) = 1;
    }
    hnf_inplace(W);
    ZMat K;
    K.cols = n;
    for (size_t i = 0; i < W.rows; ++i) {
        bool zero = true;
        for (size_t j = 0; j < A.rows && zero; ++j)
            if (W.at(i, j) != 0) zero = false;
        if (zero) {
            std::vector<mpz_class> v(n);
            for (size_t c = 0; c < n; ++c) v[c] = W.at(i, A.rows + c);
            K.push_row(v);
        }
    }
    return hnf(K);
}

ZMat saturate(const ZMat& A) {
    // sat(L) = kernel(kernel(L)): the double annihilator over Z.
    ZMat K = kernel(A);
    if (K.rows == 0) {
        // full rank: saturation is Z^cols intersect Q-span = depends on rank
        // kernel(empty) below still handles it; build explicitly:
        ZMat Z(0, A.cols);
        return kernel(Z);  // = identity lattice Z^cols
    }
    return kernel(K);
}

ZMat lattice_sum(const ZMat& A, const ZMat& B) {
    if (A.cols != B.cols) throw std::invalid_argument("lattice_sum: column mismatch");
    ZMat S = A;
    for (size_t r = 0; r < B.rows; ++r) S.push_row(B.row(r));
    return hnf(S);
}

bool hnf_contains(const ZMat& H, const std::vector<mpz_class>& v) {
    return hnf_solve(H, v).has_value();
}

std::optional<std::vector<mpz_class>> hnf_solve(const ZMat& H, const std::vector<mpz_class>& v) {
    if (v.size() != H.cols) throw std::invalid_argument("hnf_solve: length mismatch");
    std::vector<mpz_class> rem = v, x(H.rows, 0);
    size_t r = 0;
    for (size_t c = 0; c < H.cols; ++c) {
        if (r < H.rows && H.at(r, c) != 0) {
            mpz_class q, rr;
            mpz_fdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), rem[c].get_mpz_t(), H.at(r, c).get_mpz_t());
            if (rr != 0) return std::nullopt;
            x[r] = q;
            if (q != 0)
                for (size_t j = c; j < H.cols; ++j) rem[j] -= q * H.at(r, j);
            ++r;
        } else if (rem[c] != 0) {
            return std::nullopt;
        }
    }
    for (size_t c = 0; c < H.cols; ++c)
        if (rem[c] != 0) return std::nullopt;
    return x;
}

bool lattice_equal(const ZMat& A, const ZMat& B) { return hnf(A) == hnf(B); }

SmithResult smith_normal_form(const ZMat& A) {
    SmithResult R;
    R.D = A;
    R.U = ZMat::identity(A.rows);
    R.V = ZMat::identity(A.cols);
    ZMat& D = R.D;
    ZMat& U = R.U;
    ZMat& V = R.V;

    auto swap_cols = [&](ZMat& M, size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < M.rows; ++r) std::swap(M.at(r, i), M.at(r, j));
    };
    auto submul_col = [&](ZMat& M, size_t i, size_t j, const mpz_class& q) {
        if (q == 0) return;
        for (size_t r = 0; r < M.rows; ++r) M.at(r, i) -= q * M.at(r, j);
    };

    size_t t = 0;
    size_t nmin = std::min(A.rows, A.cols);
    while (t < nmin) {
        // find a nonzero pivot in the trailing block
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < D.rows && !found; ++i)
            for (size_t j = t; j < D.cols && !found; ++j)
                if (D.at(i, j) != 0) { pi = i; pj = j; found = true; }
        if (!found) break;
        swap_rows(D, t, pi); swap_rows(U, t, pi);
        swap_cols(D, t, pj); swap_cols(V, t, pj);
        // clear row and column t
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = t + 1; i < D.rows; ++i) {
                if (D.at(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
                submul_row(D, i, t, q); submul_row(U, i, t, q);
                if (D.at(i, t) != 0) {
                    swap_rows(D, t, i); swap_rows(U, t, i);
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < D.cols; ++j) {
                if (D.at(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
                submul_col(D, j, t, q); submul_col(V, j, t, q);
                if (D.at(t, j) != 0) {
                    swap_cols(D, t, j); swap_cols(V, t, j);
                    dirty = true;
                }
            }
        }
        // divisibility fixup: d_t must divide every entry of the trailing block
        bool restart = false;
        for (size_t i = t + 1; i < D.rows && !restart; ++i)
            for (size_t j = t + 1; j < D.cols && !restart; ++j)
                if (D.at(i, j) % D.at(t, t) != 0) {
                    // add row i to row t and redo this step
                    for (size_t c = 0; c < D.cols; ++c) D.at(t, c) += D.at(i, c);
                    for (size_t c = 0; c < U.cols; ++c) U.at(t, c) += U.at(i, c);
                    restart = true;
                }
        if (restart) continue;
        if (D.at(t, t) < 0) { negate_row(D, t); negate_row(U, t); }
        ++t;
    }
    R.rank = t;
    return R;
}

}  // namespace fermatst
