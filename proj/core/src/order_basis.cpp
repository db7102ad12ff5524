#include "krylovium/order_basis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace krylovium {

namespace {

struct ColumnOp {
    std::size_t target;
    std::size_t pivot;
    std::uint64_t coef;  // target += coef * pivot
};

struct StepResult {
    std::vector<ColumnOp> ops;
    std::vector<std::size_t> pivot_cols;
};

// One order-1 elimination on the constant residual. Columns are processed by
// nondecreasing (delta, index); a column that stays nonzero after reduction
// against the chosen pivots becomes a pivot at its first nonzero row.
StepResult eliminate_step(DenseMatrix& delta_mat, const std::vector<std::int64_t>& delta) {
    const PrimeModulus& mod = delta_mat.modulus();
    std::size_t r = delta_mat.rows(), c = delta_mat.cols();
    std::vector<std::size_t> cols(c);
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(),
                     [&](std::size_t a, std::size_t b) { return delta[a] < delta[b]; });

    StepResult res;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::vector<std::uint64_t> pivot_inv;
    for (std::size_t j : cols) {
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            auto [pr, pc] = pivots[k];
            std::uint64_t v = delta_mat.at(pr, j);
            if (v == 0) continue;
            std::uint64_t coef = mod.neg(mod.mul(v, pivot_inv[k]));
            for (std::size_t i = 0; i < r; ++i)
                delta_mat.set(i, j, mod.add(delta_mat.at(i, j), mod.mul(coef, delta_mat.at(i, pc))));
            res.ops.push_back({j, pc, coef});
        }
        std::size_t pr = r;
        for (std::size_t i = 0; i < r; ++i)
            if (delta_mat.at(i, j)) {
                pr = i;
                break;
            }
        if (pr == r) continue;
        pivots.emplace_back(pr, j);
        pivot_inv.push_back(mod.inv(delta_mat.at(pr, j)));
        res.pivot_cols.push_back(j);
    }
    return res;
}

void apply_ops_poly(PolyMatrix& M, const std::vector<ColumnOp>& ops) {
    for (const auto& op : ops) {
        for (std::size_t i = 0; i < M.rows(); ++i)
            M.at(i, op.target).add_scaled(M.at(i, op.pivot), op.coef);
    }
}

void multiply_cols_by_x(PolyMatrix& M, const std::vector<std::size_t>& cols) {
    for (std::size_t j : cols)
        for (std::size_t i = 0; i < M.rows(); ++i) M.at(i, j) = M.at(i, j).shifted_up(1);
}

PolyMatrix sort_columns_by_cdeg(const PolyMatrix& Q) {
    DegreeTuple cd = Q.cdeg();
    std::vector<std::size_t> idx(Q.cols());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return cd[a] < cd[b]; });
    return Q.select_cols(idx);
}

PolyMatrix order_basis_iterative(const PolyMatrix& F, std::int64_t order, std::vector<std::int64_t>& delta) {
    const PrimeModulus& mod = F.modulus();
    std::size_t c = F.cols();
    PolyMatrix Q = PolyMatrix::identity(c, mod);
    PolyMatrix R = F.truncate(order);
    for (std::int64_t k = 0; k < order; ++k) {
        DenseMatrix d = R.coeff(k);
        StepResult st = eliminate_step(d, delta);
        apply_ops_poly(Q, st.ops);
        apply_ops_poly(R, st.ops);
        multiply_cols_by_x(Q, st.pivot_cols);
        multiply_cols_by_x(R, st.pivot_cols);
        R = R.truncate(order);
        for (std::size_t j : st.pivot_cols) ++delta[j];
    }
    return Q;
}

// Single constant step expressed directly as a degree-<=1 basis.
PolyMatrix order_basis_base(const PolyMatrix& F, std::vector<std::int64_t>& delta) {
    const PrimeModulus& mod = F.modulus();
    std::size_t c = F.cols();
    DenseMatrix d = F.coeff(0);
    StepResult st = eliminate_step(d, delta);
    PolyMatrix Q = PolyMatrix::identity(c, mod);
    apply_ops_poly(Q, st.ops);
    multiply_cols_by_x(Q, st.pivot_cols);
    for (std::size_t j : st.pivot_cols) ++delta[j];
    return Q;
}

PolyMatrix order_basis_dnc(const PolyMatrix& F, std::int64_t order, std::vector<std::int64_t>& delta) {
    if (order == 1) return order_basis_base(F, delta);
    std::int64_t half = order / 2;
    PolyMatrix Q1 = order_basis_dnc(F.truncate(half), half, delta);
    PolyMatrix R = pm_mul_truncated(F, Q1, order).shift_down(half);
    PolyMatrix Q2 = order_basis_dnc(R, order - half, delta);
    return pm_mul(Q1, Q2);
}

void check_order_args(const PolyMatrix& F, std::int64_t order) {
    if (order < 1) throw std::invalid_argument("approximant order must be >= 1");
    (void)F;
}

}  // namespace

PolyMatrix approximant_basis_iterative(const PolyMatrix& F, std::int64_t order) {
    check_order_args(F, order);
    std::vector<std::int64_t> delta(F.cols(), 0);
    return sort_columns_by_cdeg(order_basis_iterative(F, order, delta));
}

PolyMatrix approximant_basis_dnc(const PolyMatrix& F, std::int64_t order) {
    check_order_args(F, order);
    std::vector<std::int64_t> delta(F.cols(), 0);
    return sort_columns_by_cdeg(order_basis_dnc(F.truncate(order), order, delta));
}

PolyMatrix approximant_basis(const PolyMatrix& F, std::int64_t order) {
    check_order_args(F, order);
    std::vector<std::int64_t> delta(F.cols(), 0);
    if (order <= 16) return sort_columns_by_cdeg(order_basis_iterative(F, order, delta));
    return sort_columns_by_cdeg(order_basis_dnc(F.truncate(order), order, delta));
}

namespace {

// Indices of columns of Q annihilated by F, determined by an exact product.
std::vector<std::size_t> exact_kernel_columns(const PolyMatrix& F, const PolyMatrix& Q) {
    PolyMatrix prod = pm_mul(F, Q);
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < Q.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < prod.rows() && zero; ++i) zero = prod.at(i, j).is_zero();
        if (zero) cols.push_back(j);
    }
    return cols;
}

}  // namespace

KernelBasisResult minimal_kernel_basis(const PolyMatrix& F) {
    if (F.degree() > 1) throw std::invalid_argument("kernel basis input must have degree <= 1");
    if (F.cols() < F.rows()) throw DimensionError("kernel basis input must have at least as many columns as rows");
    const std::size_t n = F.rows();
    const std::size_t m = F.cols() - n;
    if (m == 0) return {PolyMatrix(n, 0, F.modulus()), n};

    // An order basis at order > max kernel column degree + deg F already
    // contains every kernel column; once m of them are present, later order
    // steps leave them untouched, so stopping early returns the same columns
    // as the full run.
    std::int64_t n64 = static_cast<std::int64_t>(n);
    for (std::int64_t order : {n64 + 2, 2 * n64 + 2}) {
        PolyMatrix Q = approximant_basis(F, order);
        std::vector<std::size_t> cols = exact_kernel_columns(F, Q);
        if (cols.size() == m) return {Q.select_cols(cols), n};
        if (cols.size() > m)
            throw RankDeficiencyError("kernel has more than the expected number of basis vectors (input rank deficient)");
    }
    throw RankDeficiencyError("kernel basis extraction found too few kernel vectors");
}

std::vector<Poly> hermite_diagonal(const PolyMatrix& T) {
    if (T.rows() != T.cols()) throw DimensionError("Hermite diagonal needs a square matrix");
    const std::size_t m = T.rows();
    const PrimeModulus& mod = T.modulus();
    if (m == 0) return {};

    PolyMatrix w = T;
    // Unimodular column elimination to upper triangular form, bottom row
    // first. Off-diagonal degree reduction keeps intermediate growth down.
    for (std::size_t i = m; i-- > 0;) {
        // gcd-style chaining on row i across columns 0..i
        while (true) {
            std::size_t nonzero = 0, last = 0;
            for (std::size_t j = 0; j <= i; ++j)
                if (!w.at(i, j).is_zero()) {
                    ++nonzero;
                    last = j;
                }
            if (nonzero == 0)
                throw SingularMatrixError("Hermite diagonal of a singular matrix", 0);
            if (nonzero == 1) {
                if (last != i) {
                    for (std::size_t r = 0; r < m; ++r) std::swap(w.at(r, last), w.at(r, i));
                }
                break;
            }
            // Reduce the larger-degree entry by the smaller one.
            std::size_t a = 0, b = 0;
            std::int64_t best = -1;
            for (std::size_t j = 0; j <= i; ++j) {
                if (w.at(i, j).is_zero()) continue;
                if (best < 0 || w.at(i, j).degree() < best) {
                    best = w.at(i, j).degree();
                    b = j;
                }
            }
            for (std::size_t j = 0; j <= i; ++j) {
                if (j == b || w.at(i, j).is_zero()) continue;
                a = j;
                Poly q = w.at(i, a).divrem(w.at(i, b)).first;
                for (std::size_t r = 0; r < m; ++r) w.at(r, a) = w.at(r, a) - q * w.at(r, b);
            }
        }
        // Degree-reduce the settled columns to the right against column i.
        const Poly& piv = w.at(i, i);
        for (std::size_t j = i + 1; j < m; ++j) {
            if (w.at(i, j).degree() >= piv.degree()) {
                Poly q = w.at(i, j).divrem(piv).first;
                for (std::size_t r = 0; r <= i; ++r) w.at(r, j) = w.at(r, j) - q * w.at(r, i);
            }
        }
    }
    std::vector<Poly> diag;
    diag.reserve(m);
    for (std::size_t i = 0; i < m; ++i) diag.push_back(w.at(i, i).make_monic());
    return diag;
}

}  // namespace krylovium
