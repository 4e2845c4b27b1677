#include "fermatst/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fermatst/modarith.hpp"

namespace fermatst {

ExponentVector::ExponentVector(long m_, std::vector<long> e_) : m(m_), e(std::move(e_)) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("ExponentVector: modulus must be odd >= 3");
    if ((long)e.size() != m - 1) throw std::invalid_argument("ExponentVector: length must be m-1");
}

bool ExponentVector::is_zero() const {
    for (long x : e)
        if (x != 0) return false;
    return true;
}

long ExponentVector::positive_degree() const {
    long q = 0;
    for (long x : e)
        if (x > 0) q += x;
    return q;
}

long ExponentVector::coordinate_sum() const {
    long s = 0;
    for (long x : e) s += x;
    return s;
}

std::vector<mpz_class> ExponentVector::as_mpz() const {
    return std::vector<mpz_class>(e.begin(), e.end());
}

std::string ExponentVector::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "]";
    return os.str();
}

GammaWord char_of_exponent(const ExponentVector& v) {
    if (v.is_zero()) throw std::invalid_argument("char_of_exponent: zero vector");
    std::vector<long> idx;
    for (long j = 1; j < v.m; ++j) {
        long ej = v.e[j - 1];
        for (long t = 0; t < ej; ++t) idx.push_back(j);
        for (long t = 0; t < -ej; ++t) idx.push_back(v.m - j);
    }
    return GammaWord(v.m, std::move(idx));
}

bool is_mt_equation(const ExponentVector& v) {
    if (v.is_zero()) return false;
    if (v.coordinate_sum() != 0) return false;
    return is_tate_word(char_of_exponent(v));
}

bool EquationLattice::contains(const ExponentVector& v) const {
    if (v.m != m) throw std::invalid_argument("EquationLattice::contains: modulus mismatch");
    return hnf_contains(basis, v.as_mpz());
}

EquationLattice compute_lattice(long m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("compute_lattice: m must be odd >= 3");
    // W_u[j] = [uj] + [uj] + [-2uj]; constancy of the character weight over
    // units is equivalent to (W_u - W_1) . e = 0 for all u, together with
    // the balance condition sum(e) = 0.
    auto W = [&](long u, long j) { return 2 * mod_lo(u * j, m) + mod_lo(-2 * u * j, m); };
    std::vector<std::vector<long>> rows;
    for (long u : units_mod(m)) {
        if (u == 1) continue;
        std::vector<long> r(m - 1);
        for (long j = 1; j < m; ++j) r[j - 1] = W(u, j) - W(1, j);
        rows.push_back(std::move(r));
    }
    rows.push_back(std::vector<long>(m - 1, 1));
    ZMat A = ZMat::from_rows(rows, m - 1);
    EquationLattice L;
    L.m = m;
    L.basis = kernel(A);
    // cross-validate against the direct definition
    for (size_t r = 0; r < L.basis.rows; ++r) {
        std::vector<long> e(m - 1);
        for (long j = 0; j < m - 1; ++j) e[j] = (long)L.basis.at(r, j).get_si();
        if (!is_mt_equation(ExponentVector(m, e)))
            throw std::logic_error("compute_lattice: kernel row fails is_mt_equation");
    }
    return L;
}

namespace {

// Enumerate all balanced vectors with positive degree exactly built from a
// positive multiset P and negative multiset N of total size q each, with
// disjoint supports handled by cancellation (P and N may overlap; overlap
// cancels, which only produces vectors of smaller degree already seen).
void enumerate_balanced(long m, long q, const std::function<void(const ExponentVector&)>& emit) {
    // multisets of size q over {1..m-1}, realized as nondecreasing tuples
    std::vector<long> P(q), N(q);
    std::function<void(long, long)> recN = [&](long pos, long lo) {
        if (pos == q) {
            std::vector<long> e(m - 1, 0);
            for (long x : P) e[x - 1]++;
            for (long x : N) e[x - 1]--;
            ExponentVector v(m, e);
            if (!v.is_zero()) emit(v);
            return;
        }
        for (long x = lo; x < m; ++x) {
            N[pos] = x;
            recN(pos + 1, x);
        }
    };
    std::function<void(long, long)> recP = [&](long pos, long lo) {
        if (pos == q) {
            recN(0, 1);
            return;
        }
        for (long x = lo; x < m; ++x) {
            P[pos] = x;
            recP(pos + 1, x);
        }
    };
    recP(0, 1);
}

}  // namespace

GeneratorSet minimal_degree_generators(const EquationLattice& L) {
    GeneratorSet G;
    if (L.rank() == 0) {
        G.q = 2;  // the polarization class still lives in degree 2
        return G;
    }
    const long m = L.m;
    for (long q = 1; q <= 2 * m; ++q) {
        std::set<ExponentVector> found;
        enumerate_balanced(m, q, [&](const ExponentVector& v) {
            if (v.positive_degree() <= q && L.contains(v)) found.insert(v);
        });
        if (found.empty()) continue;
        ZMat S(0, m - 1);
        S.cols = m - 1;
        for (const auto& v : found) S.push_row(v.as_mpz());
        if (lattice_equal(S, L.basis)) {
            // prune: greedily keep a minimal generating subset, lowest degree first
            std::vector<ExponentVector> cand(found.begin(), found.end());
            std::stable_sort(cand.begin(), cand.end(), [](const ExponentVector& a, const ExponentVector& b) {
                return a.positive_degree() < b.positive_degree();
            });
            ZMat acc(0, m - 1);
            acc.cols = m - 1;
            for (const auto& v : cand) {
                if (hnf_contains(hnf(acc), v.as_mpz())) continue;
                acc.push_row(v.as_mpz());
                G.generators.push_back(v);
                if (lattice_equal(acc, L.basis)) break;
            }
            G.q = 0;
            for (const auto& v : G.generators) G.q = std::max(G.q, v.positive_degree());
            G.q = std::max(G.q, 2L);
            return G;
        }
    }
    throw std::logic_error("minimal_degree_generators: enumeration bound exceeded");
}

std::vector<ExponentVector> tate_class_basis(const EquationLattice& L, long n) {
    if (n < 1) throw std::invalid_argument("tate_class_basis: n must be >= 1");
    std::set<ExponentVector> found;
    enumerate_balanced(L.m, n, [&](const ExponentVector& v) {
        if (v.positive_degree() <= n && L.contains(v)) found.insert(v);
    });
    return std::vector<ExponentVector>(found.begin(), found.end());
}

}  // namespace fermatst
