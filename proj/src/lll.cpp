#include "fermatst/lll.hpp"

#include <stdexcept>

namespace fermatst {

namespace {

mpz_class dot(const ZMat& B, size_t i, size_t j) {
    mpz_class s = 0;
    for (size_t c = 0; c < B.cols; ++c) s += B.at(i, c) * B.at(j, c);
    return s;
}

}  // namespace

// Integer LLL in the style of Cohen, Algorithm 2.6.7: maintains the Gram
// determinants d_i and the scaled Gram-Schmidt coefficients
// lambda_{i,j} = d_j * mu_{i,j}, all integers.
void lll_reduce(ZMat& B) {
    const size_t n = B.rows;
    if (n <= 1) return;
    std::vector<mpz_class> d(n + 1);
    std::vector<std::vector<mpz_class>> lam(n, std::vector<mpz_class>(n, mpz_class(0)));
    d[0] = 1;

    auto init_row = [&](size_t i) {
        for (size_t j = 0; j <= i; ++j) {
            mpz_class u = dot(B, i, j);
            for (size_t t = 0; t < j; ++t) u = (d[t + 1] * u - lam[i][t] * lam[j][t]) / d[t];
            if (j < i)
                lam[i][j] = u;
            else {
                d[i + 1] = u;
                if (u <= 0) throw std::invalid_argument("lll_reduce: rows not independent");
            }
        }
    };
    for (size_t i = 0; i < n; ++i) init_row(i);

    auto red = [&](size_t k, size_t l) {
        // size-reduce b_k against b_l
        mpz_class two_lam = 2 * lam[k][l];
        if (mpz_cmpabs(two_lam.get_mpz_t(), d[l + 1].get_mpz_t()) <= 0) return;
        mpz_class q, num = 2 * lam[k][l] + d[l + 1];
        mpz_class den = 2 * d[l + 1];
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());  // round(lam/d)
        if (q == 0) return;
        for (size_t c = 0; c < B.cols; ++c) B.at(k, c) -= q * B.at(l, c);
        lam[k][l] -= q * d[l + 1];
        for (size_t t = 0; t < l; ++t) lam[k][t] -= q * lam[l][t];
    };

    size_t k = 1;
    while (k < n) {
        red(k, k - 1);
        // Lovasz condition with delta = 99/100:
        // swap iff 100 (d_{k+1} d_{k-1} + lam^2) < 99 d_k^2
        mpz_class lhs = 100 * (d[k + 1] * d[k - 1] + lam[k][k - 1] * lam[k][k - 1]);
        mpz_class rhs = 99 * d[k] * d[k];
        if (lhs < rhs) {
            // swap rows k and k-1, update bookkeeping
            for (size_t c = 0; c < B.cols; ++c) std::swap(B.at(k, c), B.at(k - 1, c));
            for (size_t t = 0; t + 1 < k; ++t) std::swap(lam[k][t], lam[k - 1][t]);
            mpz_class lambda = lam[k][k - 1];
            mpz_class Bnew = (d[k - 1] * d[k + 1] + lambda * lambda) / d[k];
            for (size_t i = k + 1; i < n; ++i) {
                mpz_class t = lam[i][k];
                lam[i][k] = (d[k + 1] * lam[i][k - 1] - lambda * t) / d[k];
                lam[i][k - 1] = (Bnew * t + lambda * lam[i][k]) / d[k + 1];
            }
            d[k] = Bnew;
            if (k > 1) --k;
        } else {
            for (size_t l = k >= 2 ? k - 2 : 0; ; --l) {
                red(k, l);
                if (l == 0) break;
            }
            ++k;
        }
    }
}

}  // namespace fermatst
