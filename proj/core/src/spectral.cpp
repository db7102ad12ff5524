#include "krylovium/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace krylovium {

Poly vector_minpoly(const DenseMatrix& A, const DenseMatrix& u) {
    if (A.rows() != A.cols()) throw DimensionError("A must be square");
    if (u.cols() != 1 || u.rows() != A.rows()) throw DimensionError("u must be a single column of length n");
    KernelBasisResult kb = minimal_kernel_basis(
        [&] {
            const PrimeModulus& mod = A.modulus();
            std::size_t n = A.rows();
            PolyMatrix F(n, n + 1, mod);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::vector<std::uint64_t> c{mod.neg(A.at(i, j)), i == j ? 1 % mod.value() : 0};
                    F.at(i, j) = Poly(std::move(c), mod);
                }
                F.at(i, n) = Poly::constant(mod.neg(u.at(i, 0)), mod);
            }
            return F;
        }());
    return kb.bottom().at(0, 0).make_monic();
}

namespace {

// Smith normal form diagonal of xI - A by classical elimination over the
// polynomial ring: bring the least-degree entry to the pivot, clear its row
// and column, and restart the pivot whenever a division leaves a remainder
// somewhere in the trailing block.
std::vector<Poly> smith_diagonal_of_pencil(const DenseMatrix& A) {
    const PrimeModulus& mod = A.modulus();
    std::size_t n = A.rows();
    PolyMatrix w(n, n, mod);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::uint64_t> c{mod.neg(A.at(i, j)), i == j ? 1 % mod.value() : 0};
            w.at(i, j) = Poly(std::move(c), mod);
        }

    std::vector<Poly> diag;
    for (std::size_t k = 0; k < n; ++k) {
        while (true) {
            // least-degree nonzero entry of the trailing block -> (k, k)
            std::size_t bi = k, bj = k;
            std::int64_t best = -1;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j) {
                    const Poly& e = w.at(i, j);
                    if (e.is_zero()) continue;
                    if (best < 0 || e.degree() < best) {
                        best = e.degree();
                        bi = i;
                        bj = j;
                    }
                }
            if (best < 0) throw SingularMatrixError("characteristic pencil degenerated", k);
            if (bi != k)
                for (std::size_t j = k; j < n; ++j) std::swap(w.at(k, j), w.at(bi, j));
            if (bj != k)
                for (std::size_t i = k; i < n; ++i) std::swap(w.at(i, k), w.at(i, bj));

            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (w.at(i, k).is_zero()) continue;
                auto [q, r] = w.at(i, k).divrem(w.at(k, k));
                for (std::size_t j = k; j < n; ++j) w.at(i, j) = w.at(i, j) - q * w.at(k, j);
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (w.at(k, j).is_zero()) continue;
                auto [q, r] = w.at(k, j).divrem(w.at(k, k));
                for (std::size_t i = k; i < n; ++i) w.at(i, j) = w.at(i, j) - q * w.at(i, k);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;
            bool row_col_clear = true;
            for (std::size_t i = k + 1; i < n && row_col_clear; ++i) row_col_clear = w.at(i, k).is_zero();
            for (std::size_t j = k + 1; j < n && row_col_clear; ++j) row_col_clear = w.at(k, j).is_zero();
            if (!row_col_clear) continue;
            // divisibility sweep: pivot must divide the whole trailing block
            bool divides_all = true;
            for (std::size_t i = k + 1; i < n && divides_all; ++i)
                for (std::size_t j = k + 1; j < n && divides_all; ++j) {
                    if (w.at(i, j).is_zero()) continue;
                    if (!w.at(i, j).divrem(w.at(k, k)).second.is_zero()) {
                        // fold the offending row into row k and restart
                        for (std::size_t jj = k; jj < n; ++jj) w.at(k, jj) = w.at(k, jj) + w.at(i, jj);
                        divides_all = false;
                    }
                }
            if (divides_all) break;
        }
        diag.push_back(w.at(k, k).make_monic());
    }
    return diag;
}

}  // namespace

DenseMatrix companion_matrix(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("companion matrix needs a monic f, deg >= 1");
    const PrimeModulus& mod = f.modulus();
    std::size_t n = static_cast<std::size_t>(f.degree());
    DenseMatrix C(n, n, mod);
    for (std::size_t i = 0; i + 1 < n; ++i) C.set(i + 1, i, 1);
    for (std::size_t i = 0; i < n; ++i) C.set(i, n - 1, mod.neg(f.coeff(i)));
    return C;
}

FrobeniusData invariant_factors(const DenseMatrix& A) {
    if (A.rows() != A.cols()) throw DimensionError("invariant factors need a square matrix");
    std::vector<Poly> diag = smith_diagonal_of_pencil(A);
    std::vector<Poly> factors;
    for (auto& f : diag)
        if (f.degree() >= 1) factors.push_back(std::move(f));

    std::size_t n = A.rows();
    DenseMatrix block(n, n, A.modulus());
    std::size_t off = 0;
    for (const Poly& f : factors) {
        DenseMatrix C = companion_matrix(f);
        for (std::size_t i = 0; i < C.rows(); ++i)
            for (std::size_t j = 0; j < C.cols(); ++j) block.set(off + i, off + j, C.at(i, j));
        off += C.rows();
    }
    return {std::move(factors), std::move(block)};
}

Poly matrix_minpoly(const DenseMatrix& A) {
    FrobeniusData f = invariant_factors(A);
    if (f.invariant_factors.empty()) return Poly::one(A.modulus());  // n = 0
    return f.invariant_factors.back();
}

namespace {

// Paterson-Stockmeyer evaluation of p at A.
DenseMatrix eval_poly_at_matrix(const Poly& p, const DenseMatrix& A) {
    const PrimeModulus& mod = A.modulus();
    std::size_t n = A.rows();
    if (p.is_zero()) return DenseMatrix(n, n, mod);
    std::size_t deg = static_cast<std::size_t>(p.degree());
    std::size_t b = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(deg + 1)))));

    std::vector<DenseMatrix> pow;  // A^0 .. A^b
    pow.reserve(b + 1);
    pow.push_back(DenseMatrix::identity(n, mod));
    for (std::size_t i = 1; i <= b; ++i) pow.push_back(pow.back() * A);

    std::size_t blocks = (deg + 1 + b - 1) / b;
    DenseMatrix acc(n, n, mod);
    for (std::size_t blk = blocks; blk-- > 0;) {
        if (blk + 1 < blocks) acc = acc * pow[b];
        DenseMatrix part(n, n, mod);
        for (std::size_t i = 0; i < b; ++i) {
            std::uint64_t c = p.coeff(blk * b + i);
            if (c == 0) continue;
            part = part + pow[i].scaled(c);
        }
        acc = acc + part;
    }
    return acc;
}

}  // namespace

DenseMatrix matrix_power(const DenseMatrix& A, const BigNat& k) {
    if (A.rows() != A.cols()) throw DimensionError("matrix power needs a square matrix");
    if (A.rows() == 0) return A;
    Poly mu = matrix_minpoly(A);
    Poly xk = Poly::powmod_x(k, mu);
    return eval_poly_at_matrix(xk, A);
}

KalmanData kalman_decomposition(const KrylovSpec& spec) {
    KrylovBasisResult basis = max_krylov_basis(spec);
    std::size_t n = spec.n(), nu = basis.basis.cols();
    const PrimeModulus& mod = spec.A.modulus();

    DenseMatrix P(n, n, mod);
    for (std::size_t j = 0; j < nu; ++j) P.paste_cols(j, basis.basis.col_range(j, j + 1));

    // Complete with unit vectors, scanned in index order.
    std::vector<std::vector<std::uint64_t>> pivot_cols;
    std::vector<std::size_t> pivot_rows;
    auto absorb = [&](std::vector<std::uint64_t> v) -> bool {
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
            std::uint64_t c = v[pivot_rows[k]];
            if (c == 0) continue;
            for (std::size_t i = 0; i < n; ++i)
                if (pivot_cols[k][i]) v[i] = mod.sub(v[i], mod.mul(c, pivot_cols[k][i]));
        }
        std::size_t pr = n;
        for (std::size_t i = 0; i < n; ++i)
            if (v[i]) {
                pr = i;
                break;
            }
        if (pr == n) return false;
        std::uint64_t inv = mod.inv(v[pr]);
        for (std::size_t i = 0; i < n; ++i) v[i] = mod.mul(v[i], inv);
        pivot_cols.push_back(std::move(v));
        pivot_rows.push_back(pr);
        return true;
    };
    for (std::size_t j = 0; j < nu; ++j) {
        std::vector<std::uint64_t> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = basis.basis.at(i, j);
        absorb(std::move(v));
    }
    std::size_t next = nu;
    for (std::size_t idx = 0; idx < n && next < n; ++idx) {
        std::vector<std::uint64_t> e(n, 0);
        e[idx] = 1;
        if (absorb(std::move(e))) {
            P.set(idx, next, 1);
            ++next;
        }
    }
    return {std::move(P), nu};
}

}  // namespace krylovium
