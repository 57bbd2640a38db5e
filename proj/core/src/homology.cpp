#include "mantra/homology.hpp"

#include <algorithm>
#include <cstdlib>

namespace mantra {

bool IntegerMatrix::is_zero() const {
    for (const mpz_class& e : entries_)
        if (e != 0) return false;
    return true;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix T(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) T.at(c, r) = at(r, c);
    return T;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    IntegerMatrix P(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                P.at(r, c) += a * rhs.at(k, c);
        }
    return P;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& K, int n) {
    if (n < 0 || n > K.dim()) throw DimensionOutOfRangeError(n, K.dim());
    const auto& cols = K.k_faces(n);
    if (n == 0) return IntegerMatrix(0, cols.size());
    const auto& rows = K.k_faces(n - 1);

    IntegerMatrix B(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Simplex& s = cols[c];
        int sign = 1;
        for (int i = 0; i <= s.dim(); ++i) {
            Simplex f = s.facet_opposite(i);
            auto r = K.index_of(f);
            // Downward closure guarantees every face is present.
            B.at(*r, c) = sign;
            sign = -sign;
        }
    }
    return B;
}

namespace {

// Locates the nonzero entry of minimal absolute value in M[t.., t..].
bool find_pivot(const IntegerMatrix& M, std::size_t t, std::size_t& pr,
                std::size_t& pc) {
    bool found = false;
    mpz_class best;
    for (std::size_t r = t; r < M.rows(); ++r)
        for (std::size_t c = t; c < M.cols(); ++c) {
            const mpz_class& e = M.at(r, c);
            if (e == 0) continue;
            mpz_class a = abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = r;
                pc = c;
                if (best == 1) return true;
            }
        }
    return found;
}

void swap_rows(IntegerMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < M.cols(); ++c) swap(M.at(a, c), M.at(b, c));
}

void swap_cols(IntegerMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < M.rows(); ++r) swap(M.at(r, a), M.at(r, b));
}

}  // namespace

SmithDecomposition smith_normal_form(IntegerMatrix M) {
    SmithDecomposition D;
    const std::size_t bound = std::min(M.rows(), M.cols());
    mpz_class q;

    for (std::size_t t = 0; t < bound; ++t) {
        std::size_t pr, pc;
        if (!find_pivot(M, t, pr, pc)) break;
        swap_rows(M, t, pr);
        swap_cols(M, t, pc);

        // Clear row t and column t; repeat because eliminations leave
        // remainders that become new, smaller pivots.
        for (;;) {
            bool clean = true;
            for (std::size_t r = t + 1; r < M.rows(); ++r) {
                if (M.at(r, t) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), M.at(r, t).get_mpz_t(),
                           M.at(t, t).get_mpz_t());
                if (q != 0)
                    for (std::size_t c = t; c < M.cols(); ++c)
                        M.at(r, c) -= q * M.at(t, c);
                if (M.at(r, t) != 0) {
                    // Remainder smaller than the pivot: promote it.
                    swap_rows(M, t, r);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < M.cols(); ++c) {
                if (M.at(t, c) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), M.at(t, c).get_mpz_t(),
                           M.at(t, t).get_mpz_t());
                if (q != 0)
                    for (std::size_t r = t; r < M.rows(); ++r)
                        M.at(r, c) -= q * M.at(r, t);
                if (M.at(t, c) != 0) {
                    swap_cols(M, t, c);
                    clean = false;
                }
            }
            if (!clean) continue;

            // Pivot must divide every remaining entry; if not, fold the
            // offending row in and re-clear.
            bool divides_all = true;
            for (std::size_t r = t + 1; r < M.rows() && divides_all; ++r)
                for (std::size_t c = t + 1; c < M.cols(); ++c)
                    if (!mpz_divisible_p(M.at(r, c).get_mpz_t(),
                                         M.at(t, t).get_mpz_t())) {
                        for (std::size_t cc = t; cc < M.cols(); ++cc)
                            M.at(t, cc) += M.at(r, cc);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }

        if (M.at(t, t) < 0) M.at(t, t) = -M.at(t, t);
        D.invariant_factors.push_back(M.at(t, t));
    }

    D.rank = D.invariant_factors.size();
    return D;
}

std::vector<mpz_class> prime_power_factors(const mpz_class& d) {
    std::vector<mpz_class> out;
    mpz_class n = d;
    mpz_class p = 2;
    while (n > 1) {
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            mpz_class pk = 1;
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
                n /= p;
                pk *= p;
            }
            out.push_back(pk);
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p * p > n && n > 1) {
            out.push_back(n);
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::pair<std::int64_t, std::vector<std::string>> homology_from(
    const SimplicialComplex& K, int n, const SmithDecomposition& snf_n,
    const SmithDecomposition& snf_above) {
    const std::int64_t f_n =
        static_cast<std::int64_t>(K.k_faces(n).size());
    const std::int64_t betti = f_n - static_cast<std::int64_t>(snf_n.rank) -
                               static_cast<std::int64_t>(snf_above.rank);

    std::vector<mpz_class> primes;
    for (const mpz_class& d : snf_above.invariant_factors)
        if (d > 1)
            for (const mpz_class& q : prime_power_factors(d))
                primes.push_back(q);
    std::sort(primes.begin(), primes.end());

    std::vector<std::string> torsion;
    torsion.reserve(primes.size());
    for (const mpz_class& q : primes) torsion.push_back("Z_" + q.get_str());
    return {betti, std::move(torsion)};
}

}  // namespace

std::pair<std::int64_t, std::vector<std::string>> homology(
    const SimplicialComplex& K, int n) {
    if (n < 0 || n > K.dim()) throw DimensionOutOfRangeError(n, K.dim());
    SmithDecomposition snf_n = smith_normal_form(boundary_matrix(K, n));
    SmithDecomposition snf_above;
    if (n < K.dim()) snf_above = smith_normal_form(boundary_matrix(K, n + 1));
    return homology_from(K, n, snf_n, snf_above);
}

HomologyProfile homology_profile(const SimplicialComplex& K) {
    HomologyProfile P;
    const int d = K.dim();
    if (d < 0) return P;

    std::vector<SmithDecomposition> snf(d + 2);
    for (int n = 0; n <= d; ++n)
        snf[n] = smith_normal_form(boundary_matrix(K, n));

    for (int n = 0; n <= d; ++n) {
        auto [betti, torsion] = homology_from(K, n, snf[n], snf[n + 1]);
        P.betti.push_back(betti);
        P.torsion.push_back(std::move(torsion));
    }
    return P;
}

}  // namespace mantra
