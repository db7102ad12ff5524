#pragma once

#include <cstdint>
#include <vector>

#include "krylovium/bignat.hpp"
#include "krylovium/krylov.hpp"

namespace krylovium {

/// Least-degree monic f with f(A) u = 0 (u given as an n x 1 matrix).
Poly vector_minpoly(const DenseMatrix& A, const DenseMatrix& u);

/// Nontrivial invariant factors f_1 | f_2 | ... | f_s (monic, deg >= 1) and
/// the block-diagonal companion form they define. Their degrees sum to n,
/// their product is the characteristic polynomial, f_s is the minimal one.
struct FrobeniusData {
    std::vector<Poly> invariant_factors;
    DenseMatrix block_form;
};

FrobeniusData invariant_factors(const DenseMatrix& A);

Poly matrix_minpoly(const DenseMatrix& A);

/// Companion matrix of a monic f, deg f >= 1.
DenseMatrix companion_matrix(const Poly& f);

/// A^k via x^k rem minpoly(A), evaluated at A by Paterson-Stockmeyer.
DenseMatrix matrix_power(const DenseMatrix& A, const BigNat& k);

/// Similarity P splitting off the A-invariant subspace generated by U:
/// the first nu columns of P are the maximal Krylov basis of that subspace,
/// the rest greedily chosen unit vectors. P^{-1} A P is block upper
/// triangular with an nu x nu leading block, and P^{-1} U vanishes below it.
struct KalmanData {
    DenseMatrix P;
    std::size_t nu;
};

KalmanData kalman_decomposition(const KrylovSpec& spec);

}  // namespace krylovium
