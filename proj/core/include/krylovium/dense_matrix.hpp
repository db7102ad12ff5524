#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "krylovium/gf.hpp"

namespace krylovium {

/// Strassen crossover for DenseMatrix multiplication; 0 disables it.
/// Either way the product is the exact one, entry for entry.
std::size_t& strassen_threshold();

struct PluqDecomposition;

/// Dense row-major matrix over GF(p). Zero-column (and zero-row) matrices
/// are legal. Entries are canonical residues.
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols, PrimeModulus mod)
        : rows_(rows), cols_(cols), a_(rows * cols, 0), mod_(mod) {}

    /// Row-major initializer, entries reduced mod p.
    DenseMatrix(std::initializer_list<std::initializer_list<std::uint64_t>> rows, PrimeModulus mod);

    static DenseMatrix identity(std::size_t n, PrimeModulus mod);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeModulus& modulus() const { return mod_; }

    std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint64_t v) { a_[i * cols_ + j] = mod_.reduce(v); }

    FieldElement element(std::size_t i, std::size_t j) const { return FieldElement(at(i, j), mod_); }

    bool operator==(const DenseMatrix& b) const {
        return rows_ == b.rows_ && cols_ == b.cols_ && mod_ == b.mod_ && a_ == b.a_;
    }

    DenseMatrix operator+(const DenseMatrix& b) const;
    DenseMatrix operator-(const DenseMatrix& b) const;
    DenseMatrix operator*(const DenseMatrix& b) const;

    DenseMatrix transposed() const;
    DenseMatrix scaled(std::uint64_t c) const;

    bool is_zero() const;

    /// Columns [c0, c1) as a new matrix.
    DenseMatrix col_range(std::size_t c0, std::size_t c1) const;
    /// Rows [r0, r1) as a new matrix.
    DenseMatrix row_range(std::size_t r0, std::size_t r1) const;
    DenseMatrix select_cols(std::span<const std::size_t> idx) const;
    /// [*this | b]
    DenseMatrix hstack(const DenseMatrix& b) const;
    /// Overwrites columns [c0, c0 + src.cols()) with src.
    void paste_cols(std::size_t c0, const DenseMatrix& src);

    /// Lexicographically smallest independent column set of maximal size,
    /// strictly increasing. Deterministic: leftmost column, topmost pivot.
    std::vector<std::size_t> col_rank_profile() const;

    std::size_t rank() const;

    PluqDecomposition pluq() const;

    /// Throws SingularMatrixError (with the rank reached) if not invertible.
    DenseMatrix inverse() const;
    /// Solves M x = rhs for nonsingular square M.
    DenseMatrix solve(const DenseMatrix& rhs) const;

private:
    void check_same_field(const DenseMatrix& b) const;

    std::size_t rows_, cols_;
    std::vector<std::uint64_t> a_;
    PrimeModulus mod_;
};

/// Rank-revealing P*L*U*Q factorization with deterministic pivoting:
/// pivots are chosen in the leftmost column carrying a nonzero entry on or
/// below the current row, topmost such entry first.
/// Reconstruction: M = P^T * [L (unit lower trapezoid)] * [U (upper)] * Q^T,
/// with permutations stored as index maps (row i of the permuted matrix is
/// row row_perm[i] of M).
struct PluqDecomposition {
    std::vector<std::size_t> row_perm;
    std::vector<std::size_t> col_perm;
    DenseMatrix L;  // rows x rank, unit diagonal
    DenseMatrix U;  // rank x cols
    std::size_t rank;

    /// Recomposes the original matrix (used by tests).
    DenseMatrix reconstruct() const;
};

}  // namespace krylovium
