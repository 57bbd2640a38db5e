#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "mantra/complex.hpp"

namespace mantra {

/// Dense matrix over arbitrary-precision integers. SNF intermediates grow
/// beyond any fixed word size even for small inputs, so mpz entries are
/// mandatory, not an optimization.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const mpz_class& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    bool is_zero() const;
    IntegerMatrix transposed() const;
    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> entries_;
};

struct SmithDecomposition {
    std::size_t rank = 0;
    /// d_1 | d_2 | ... | d_rank, all positive.
    std::vector<mpz_class> invariant_factors;
};

struct HomologyProfile {
    std::vector<std::int64_t> betti;
    /// torsion[n] lists "Z_q" strings for the prime-power factors of the
    /// torsion subgroup of H_n, ascending; empty when H_n is free.
    std::vector<std::vector<std::string>> torsion;

    bool operator==(const HomologyProfile&) const = default;
};

/// Boundary matrix of the n-simplices: rows are (n-1)-simplices, columns
/// n-simplices, both in canonical order; sign of entry (f, s) is (-1)^i when
/// f is s with its i-th smallest vertex deleted. n = 0 gives a 0-row matrix.
IntegerMatrix boundary_matrix(const SimplicialComplex& K, int n);

/// Smith normal form via unimodular row/column operations, minimal-|pivot|
/// selection. Empty matrix decomposes to rank 0.
SmithDecomposition smith_normal_form(IntegerMatrix M);

/// (betti_n, torsion_n) for a single dimension.
std::pair<std::int64_t, std::vector<std::string>> homology(
    const SimplicialComplex& K, int n);

HomologyProfile homology_profile(const SimplicialComplex& K);

/// Splits an invariant factor > 1 into its prime-power components.
std::vector<mpz_class> prime_power_factors(const mpz_class& d);

}  // namespace mantra
