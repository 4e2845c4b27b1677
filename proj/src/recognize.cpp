#include "fermatst/recognize.hpp"

#include <sstream>
#include <stdexcept>

#include "fermatst/lll.hpp"
#include "fermatst/modarith.hpp"

namespace fermatst {

namespace {

mpz_class scaled_round(const BigFloat& x, long bits) { return x.mul_2exp(bits).round(); }

}  // namespace

RecognitionResult recognize(const BigComplex& z, long M, const mpz_class& height_bound, mpfr_prec_t prec) {
    const long phi = euler_phi(M);
    double need = 2.0 * (phi + 1) * mpz_sizeinbase(height_bound.get_mpz_t(), 2) + 64;
    if ((double)prec < need) {
        std::ostringstream os;
        os << "recognize: insufficient precision (" << prec << " < " << (long)need << ") for M=" << M;
        throw std::invalid_argument(os.str());
    }

    const long scale = prec - 16;
    const size_t n = (size_t)phi + 1;
    ZMat B(n, n + 2);
    mpfr_prec_t wp = prec + 64;
    for (long i = 0; i < phi; ++i) {
        BigComplex zi = embed_complex(CycloNumber::zeta(M, i), wp);
        B.at(i, i) = 1;
        B.at(i, n) = scaled_round(zi.re, scale);
        B.at(i, n + 1) = scaled_round(zi.im, scale);
    }
    B.at(phi, phi) = 1;
    B.at(phi, n) = scaled_round(-z.re, scale);
    B.at(phi, n + 1) = scaled_round(-z.im, scale);

    lll_reduce(B);

    RecognitionResult best;
    best.residual = BigFloat::from_long(1, prec);
    best.verified = false;
    for (size_t r = 0; r < B.rows; ++r) {
        mpz_class den = B.at(r, phi);
        if (den == 0) continue;
        // candidate: sum_i (row_i/den) zeta^i == z
        bool too_tall = false;
        std::vector<mpq_class> coeffs(phi);
        for (long i = 0; i < phi; ++i) {
            mpq_class q(B.at(r, i), den);
            q.canonicalize();
            if (abs(q.get_num()) > height_bound || q.get_den() > height_bound) { too_tall = true; break; }
            coeffs[i] = q;
        }
        if (too_tall) continue;
        CycloNumber cand(M, std::move(coeffs));
        BigComplex back = embed_complex(cand, 2 * prec);
        BigFloat diff = (back - z).abs();
        BigFloat bound = z.abs();
        BigFloat one = BigFloat::from_long(1, bound.prec());
        if (bound.cmp(one) < 0) bound = one;
        if (diff.cmp(bound.mul_2exp(-(long)prec / 2)) <= 0) {
            best.value = std::move(cand);
            best.residual = diff;
            best.verified = true;
            return best;
        }
        if (!best.verified && diff.cmp(best.residual) < 0) {
            best.value = std::move(cand);
            best.residual = diff;
        }
    }
    best.diagnostics = "no relation within height bound";
    return best;
}

RecognitionResult recognition_ladder(const BigComplex& z, long m, mpfr_prec_t prec, const mpz_class& height_bound) {
    std::vector<long> conductors;
    auto add = [&](long M) {
        for (long c : conductors)
            if (c == M) return;
        conductors.push_back(M);
    };
    long l4 = std::lcm(m, 4L), l8 = std::lcm(m, 8L), l24 = std::lcm(m, 24L);
    add(m); add(l4); add(l8); add(l24);
    long cur = l24;
    for (int extra = 0; extra < 2; ++extra) { cur *= 2; add(cur); }

    RecognitionResult last;
    last.residual = BigFloat::from_long(1, prec);
    std::ostringstream diag;
    for (long M : conductors) {
        // shrink the height bound until the precision precondition holds;
        // verification still happens against the full residual threshold
        long hbits = (long)((prec - 64) / (2 * (euler_phi(M) + 1)));
        if (hbits < 6) {
            diag << "conductor " << M << " skipped (precision too low); ";
            continue;
        }
        mpz_class h = height_bound;
        if (hbits < (long)mpz_sizeinbase(height_bound.get_mpz_t(), 2)) {
            h = 1;
            h <<= hbits;
            h -= 1;
        }
        RecognitionResult r = recognize(z, M, h, prec);
        if (r.verified) return r;
        diag << "conductor " << M << " failed (height <= 2^" << hbits << "); ";
        last = std::move(r);
    }
    last.verified = false;
    last.diagnostics = diag.str() + "ladder exhausted";
    return last;
}

}  // namespace fermatst
