#pragma once

#include <cstdint>
#include <vector>

#include "cubicver/matrix.hpp"

namespace cubicver {

// Result of exact row reduction. kernel_basis is in reduced form: one vector
// per non-pivot column, with entry 1 at that column and 0 at every other
// non-pivot column. That normal form depends only on the row space and the
// column order, so it is a canonical certificate independent of the
// elimination route that produced it.
template <class S>
struct EchelonResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::vector<S>> kernel_basis;
};

EchelonResult<Rat> echelonize(const RatMatrix& m);
EchelonResult<Fp> echelonize(const FpMatrix& m);

// Rank of M reduced mod p. Always <= the exact rank over Q; used as a fast
// cross-check, never as the source of a verdict.
std::size_t rank_mod_p(const RatMatrix& m, std::uint64_t p);

// True iff the matrix has full rank. With require_square set (the default,
// matching the pairing-matrix use) a non-square input is InvalidInput; with
// it cleared the check is rank == min(rows, cols).
bool is_nondegenerate(const RatMatrix& m, bool require_square = true);

namespace detail {

// Fraction-free (Bareiss) row echelon form over Z. Deterministic pivoting:
// scan columns left to right, take the topmost nonzero entry. Entries of the
// reduced rows are (sign-adjusted) minors of the input, so the exact
// divisions below never truncate. Input rows are consumed.
struct IntEchelon {
    std::vector<std::vector<Int>> rows; // the pivot rows, trapezoidal
    std::vector<std::size_t> pivot_cols;
    std::size_t ncols = 0;
};

IntEchelon bareiss_echelon(std::vector<std::vector<Int>>&& rows, std::size_t ncols);

// Rank only: same elimination, rows discarded.
std::size_t bareiss_rank(std::vector<std::vector<Int>>&& rows, std::size_t ncols);

// Reduced kernel basis by back-substitution over Q on the integer echelon.
std::vector<std::vector<Rat>> kernel_from_echelon(const IntEchelon& ref);

// Clears denominators row by row (row scaling preserves the row space, hence
// pivots and kernel).
std::vector<std::vector<Int>> integerize_rows(const std::vector<std::vector<Rat>>& rows);

// Exact elimination on sparse rational rows (col, value), used for the
// degree-6 Jacobian slice whose natural spanning rows have ~2 nonzeros.
// Returns the echelon as sorted sparse pivot rows keyed by pivot column.
struct SparseEchelon {
    std::vector<std::vector<std::pair<std::size_t, Rat>>> rows; // sorted by col, leading coeff 1
    std::vector<std::size_t> pivot_cols;                        // sorted ascending
    std::size_t ncols = 0;
};

SparseEchelon sparse_echelon(std::vector<std::vector<std::pair<std::size_t, Rat>>>&& rows,
                             std::size_t ncols);

std::vector<std::vector<Rat>> kernel_from_sparse(const SparseEchelon& ref);

} // namespace detail

} // namespace cubicver
