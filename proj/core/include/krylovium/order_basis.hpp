#pragma once

#include <cstdint>
#include <vector>

#include "krylovium/poly_matrix.hpp"

namespace krylovium {

/// Column-reduced basis of { p : F p = 0 mod x^order }, nonsingular, columns
/// sorted by nondecreasing column degree. `order >= 1`.
PolyMatrix approximant_basis(const PolyMatrix& F, std::int64_t order);

/// Order-by-order elimination (one constant kernel step per order unit).
/// Reference implementation; quadratic in the order.
PolyMatrix approximant_basis_iterative(const PolyMatrix& F, std::int64_t order);

/// Divide-and-conquer variant of the same computation: halve the order,
/// recurse, multiply the residual through, recurse again, compose. Returns a
/// basis with the same invariants (bases are not unique).
PolyMatrix approximant_basis_dnc(const PolyMatrix& F, std::int64_t order);

/// Right kernel basis of F, n x (n+m) of degree <= 1 and row rank n over
/// the rational functions. The result has exactly m columns, is column
/// reduced, satisfies F * basis = 0 identically, and |cdeg(basis)| <= n.
struct KernelBasisResult {
    PolyMatrix basis;      // (n+m) x m
    std::size_t top_rows;  // n

    PolyMatrix top() const { return basis.row_range(0, top_rows); }
    PolyMatrix bottom() const { return basis.row_range(top_rows, basis.rows()); }
};

KernelBasisResult minimal_kernel_basis(const PolyMatrix& F);

/// Diagonal entries (monic) of the upper-triangular Hermite form of a
/// nonsingular T, computed by unimodular column elimination. Their degrees
/// sum to deg det T.
std::vector<Poly> hermite_diagonal(const PolyMatrix& T);

}  // namespace krylovium
