#pragma once

// Test-side oracles, kept independent of the library's computation paths:
// determinants come from fraction-free elimination, products from a raw
// coefficient convolution, series checks from explicit expansions.

#include <cstdint>

#include "krylovium/poly_matrix.hpp"
#include "krylovium/rng.hpp"

namespace krylovium::oracles {

/// Exact determinant over GF(p)[x] by Bareiss elimination (exact divisions).
Poly poly_det(const PolyMatrix& M);

/// det(xI - A).
Poly charpoly(const DenseMatrix& A);

/// Product by direct coefficient convolution, no shared code with pm_mul.
PolyMatrix convolution_product(const PolyMatrix& a, const PolyMatrix& b);

PolyMatrix random_poly_matrix(std::size_t rows, std::size_t cols, std::int64_t max_deg,
                              const PrimeModulus& mod, CounterRng& rng);

/// Random P with P(0) = I (so the series inverse exists).
PolyMatrix random_unit_series_matrix(std::size_t n, std::int64_t max_deg, const PrimeModulus& mod,
                                     CounterRng& rng);

/// f(x + a) (Taylor shift).
Poly shift_variable(const Poly& f, std::uint64_t a);
PolyMatrix shift_variable(const PolyMatrix& m, std::uint64_t a);

}  // namespace krylovium::oracles
