#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "krylovium/dense_matrix.hpp"
#include "krylovium/order_basis.hpp"
#include "krylovium/poly_matrix.hpp"

namespace krylovium {

/// Input pair (A, U): A square n x n, U an n x m block of start vectors
/// (m = 0 and zero/duplicate columns are all legal).
struct KrylovSpec {
    DenseMatrix A;
    DenseMatrix U;

    KrylovSpec(DenseMatrix a, DenseMatrix u);

    std::size_t n() const { return A.rows(); }
    std::size_t m() const { return U.cols(); }
};

enum class Strategy { hybrid, keller_gehrig, polmat_only, naive };

/// Tuning knobs of max_krylov_basis. The threshold separating the two paths
/// is log2(n)^c with c = max(4/(omega-2), c1/(omega-1)); it trades loop
/// rounds against the size of the polynomial phase and never affects the
/// result.
struct AlgoConfig {
    double omega = 3.0;  // in (2, 3]
    double c1 = 2.0;     // > 0
    Strategy strategy = Strategy::hybrid;

    double derived_c() const;
    /// ceil(log2(n)^c), at least 1; n must be >= 2.
    std::int64_t threshold(std::size_t n) const;
};

/// A maximal Krylov basis: basis columns are iterates A^k u_j, grouped by j
/// ascending with k = 0 .. indices[j]-1 in order; labels record (j, k).
struct KrylovBasisResult {
    DenseMatrix basis;
    DegreeTuple indices;
    std::vector<std::pair<std::size_t, std::size_t>> column_labels;

    bool operator==(const KrylovBasisResult&) const = default;
};

/// [u_1 A u_1 ... A^{d_1-1} u_1 | u_2 ...] by repeated matrix-vector
/// products. The reference for everything else.
DenseMatrix naive_krylov_matrix(const KrylovSpec& spec, const DegreeTuple& d);

/// Maximal indices by incremental elimination: iterate each u_j until its
/// next iterate falls into the span of what has been collected so far.
DegreeTuple naive_max_indices(const KrylovSpec& spec);

/// Maximal indices as the Hermite diagonal degrees of the denominator block
/// of a kernel basis of [xI - A | -U].
DegreeTuple max_indices(const KrylovSpec& spec);

/// Krylov matrix for arbitrary orders d via a kernel basis of [I - xA | -U]
/// and a column-truncated series expansion of the matrix fraction.
DenseMatrix krylov_matrix(const KrylovSpec& spec, const DegreeTuple& d);

/// Observer for the branching loop: called once per round with the chain
/// lengths delta after the round's rank profile update.
using KrylovLoopObserver =
    std::function<void(std::size_t round, const DenseMatrix& V, const std::vector<std::int64_t>& delta)>;

/// Branching construction: chains double every round under repeated
/// squaring of A, pruned by column rank profiles.
KrylovBasisResult keller_gehrig_basis(const KrylovSpec& spec, const KrylovLoopObserver& observer = {});

/// Hybrid computation of the maximal Krylov basis: a few branching rounds
/// bound the number of vectors that still grow, the survivors go through the
/// polynomial-matrix path, and a final rank profile merges both parts.
KrylovBasisResult max_krylov_basis(const KrylovSpec& spec, const AlgoConfig& config = {});

/// Same loop adapted to a prescribed order tuple d (chains stop at d_j, no
/// rank profiles); returns the Krylov matrix, not a basis.
DenseMatrix krylov_matrix_hybrid(const KrylovSpec& spec, const DegreeTuple& d, const AlgoConfig& config = {});

/// Turns a kernel basis (S, T) of [xI - A | -U] into one of [I - xA | -U] by
/// substituting 1/x and rescaling columns by x^{cdeg T}. The returned pair
/// (S_hat, T_hat) satisfies the kernel identity with T_hat(0) invertible.
std::pair<PolyMatrix, PolyMatrix> reverse_kernel_transform(const PolyMatrix& S, const PolyMatrix& T,
                                                           std::size_t n);

}  // namespace krylovium
