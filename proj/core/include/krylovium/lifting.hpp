#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "krylovium/poly_matrix.hpp"

namespace krylovium {

/// Windows of the power series expansion of P^{-1}: slice i holds
/// (P^{-1} div x^{(2^{i+1}-2)t}) rem x^{2t}, t = base_degree. Slice i+1 is
/// obtained from slice i by a residue jump, so far windows never require
/// materializing the series in between.
struct HighOrderComponents {
    std::int64_t base_degree;
    std::vector<PolyMatrix> slices;
};

/// P^{-1} rem x^order by Newton iteration; P square with P(0) invertible.
PolyMatrix newton_series_inverse(const PolyMatrix& P, std::int64_t order);

/// Slices 0..h of the inverse expansion of P (deg P >= 1, P(0) invertible).
HighOrderComponents high_order_comp(const PolyMatrix& P, std::int64_t h);

/// (P^{-1} V) rem x^{s*t} for t = deg P >= 1, P(0) invertible, deg V < t and
/// s >= 1. Internally rounds s up to a power of two and truncates back; small
/// s (<= 4) goes through a direct Newton expansion. If comps is supplied it
/// must match P and cover ceil(log2 s) - 1 levels.
PolyMatrix series_sol(const PolyMatrix& P, const PolyMatrix& V, std::int64_t s,
                      const HighOrderComponents* comps = nullptr);

/// P^{-1} rem x^d: column j of the inverse expansion truncated at order d_j
/// (columns with d_j = 0 are zero). P(0) must be invertible.
PolyMatrix truncated_inverse(const PolyMatrix& P, const DegreeTuple& d);

/// Called after each accumulation round of truncated_product with the round
/// index and the running result; for instrumentation in tests.
using TruncatedProductObserver = std::function<void(std::size_t round, const PolyMatrix& partial)>;

/// (F G) rem x^d, column j truncated at order d_j, by splitting F into
/// doubling-width chunks so that high truncation orders meet few columns.
PolyMatrix truncated_product(const PolyMatrix& F, const PolyMatrix& G, const DegreeTuple& d,
                             const TruncatedProductObserver& observer = {});

}  // namespace krylovium
