#include "krylovium/lifting.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace krylovium {

namespace {

std::int64_t ceil_log2(std::int64_t v) {
    std::int64_t k = 0;
    while ((std::int64_t{1} << k) < v) ++k;
    return k;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

void require_constant_invertible(const PolyMatrix& P) {
    // throws SingularMatrixError if P(0) has no inverse
    (void)P.eval_at_zero().inverse();
}

}  // namespace

PolyMatrix newton_series_inverse(const PolyMatrix& P, std::int64_t order) {
    if (P.rows() != P.cols()) throw DimensionError("series inverse needs a square matrix");
    if (order < 1) throw std::invalid_argument("series order must be >= 1");
    DenseMatrix c0_inv = P.eval_at_zero().inverse();
    PolyMatrix B = PolyMatrix::from_dense(c0_inv);
    const PolyMatrix I = PolyMatrix::identity(P.rows(), P.modulus());
    std::int64_t k = 1;
    while (k < order) {
        std::int64_t k2 = std::min(2 * k, order);
        PolyMatrix E = pm_mul_truncated(P.truncate(k2), B, k2);
        PolyMatrix R = I - E;
        B = (B + pm_mul_truncated(B, R, k2)).truncate(k2);
        k = k2;
    }
    return B;
}

HighOrderComponents high_order_comp(const PolyMatrix& P, std::int64_t h) {
    std::int64_t t = P.degree();
    if (t < 1) throw std::invalid_argument("high-order components need deg P >= 1");
    if (h < 0) throw std::invalid_argument("component count must be >= 0");
    require_constant_invertible(P);

    HighOrderComponents comps{t, {}};
    comps.slices.reserve(static_cast<std::size_t>(h) + 1);
    comps.slices.push_back(newton_series_inverse(P, 2 * t));
    for (std::int64_t i = 0; i < h; ++i) {
        const PolyMatrix& prev = comps.slices.back();
        // V = low half of the window; R = residue of the expansion at the
        // midpoint; the next window is (V R div x^t) + slice_0 * R^2.
        PolyMatrix V = prev.truncate(t);
        PolyMatrix R = pm_mul(P, V).shift_down(t).truncate(t);
        for (std::size_t r = 0; r < R.rows(); ++r)
            for (std::size_t c = 0; c < R.cols(); ++c) R.at(r, c) = R.at(r, c).scaled(P.modulus().neg(1));
        PolyMatrix low = pm_mul_truncated(V, R, 2 * t).shift_down(t);
        PolyMatrix next = (low + pm_mul_truncated(pm_mul_truncated(comps.slices[0], R, 2 * t), R, 2 * t))
                              .truncate(2 * t);
        comps.slices.push_back(std::move(next));
    }
    return comps;
}

namespace {

struct SeriesSolver {
    const PolyMatrix& P;
    const HighOrderComponents& comps;
    std::int64_t t;
    PolyMatrix newton_base;  // P^{-1} rem x^{4t}

    // Residue of the expansion of P^{-1} W at offset 2^{i+1} t, from slice i.
    PolyMatrix residue_jump(std::int64_t i, const PolyMatrix& W) const {
        PolyMatrix G = pm_mul(comps.slices[static_cast<std::size_t>(i)], W).shift_down(t).truncate(t);
        PolyMatrix R = pm_mul(P, G).shift_down(t).truncate(t);
        for (std::size_t r = 0; r < R.rows(); ++r)
            for (std::size_t c = 0; c < R.cols(); ++c) R.at(r, c) = R.at(r, c).scaled(P.modulus().neg(1));
        return R;
    }

    // (P^{-1} W) rem x^{2^q t} for deg W < t.
    PolyMatrix solve(std::int64_t q, const PolyMatrix& W) const {
        std::int64_t target = (std::int64_t{1} << q) * t;
        if (q <= 2) return pm_mul_truncated(newton_base, W, target);
        std::int64_t half = target / 2;
        PolyMatrix lo = solve(q - 1, W);
        PolyMatrix R = residue_jump(q - 2, W);
        PolyMatrix hi = solve(q - 1, R);
        return lo + hi.shift_up(half);
    }
};

}  // namespace

PolyMatrix series_sol(const PolyMatrix& P, const PolyMatrix& V, std::int64_t s,
                      const HighOrderComponents* comps) {
    std::int64_t t = P.degree();
    if (t < 1) throw std::invalid_argument("series solution needs deg P >= 1");
    if (s < 1) throw std::invalid_argument("series length must be >= 1");
    if (P.cols() != V.rows()) throw DimensionError("series solution dimension mismatch");
    if (V.degree() >= t) throw std::invalid_argument("right-hand side must have degree < deg P");

    if (s <= 4) {
        PolyMatrix B = newton_series_inverse(P, s * t);
        return pm_mul_truncated(B, V, s * t);
    }

    std::int64_t q = ceil_log2(s);
    HighOrderComponents local{0, {}};
    if (comps == nullptr) {
        local = high_order_comp(P, q - 1);
        comps = &local;
    } else {
        if (comps->base_degree != t) throw std::invalid_argument("high-order components built for another degree");
        if (static_cast<std::int64_t>(comps->slices.size()) < q - 1)
            throw std::invalid_argument("high-order components cover too few levels");
        require_constant_invertible(P);
    }

    SeriesSolver solver{P, *comps, t, newton_series_inverse(P, 4 * t)};
    return solver.solve(q, V).truncate(s * t);
}

PolyMatrix truncated_inverse(const PolyMatrix& P, const DegreeTuple& d) {
    if (P.rows() != P.cols()) throw DimensionError("truncated inverse needs a square matrix");
    const std::size_t m = P.rows();
    d.require_orders(m);
    PolyMatrix Q(m, m, P.modulus());
    if (d.all_zero()) return Q;  // no arithmetic at all

    if (P.degree() <= 0) {
        DenseMatrix inv = P.eval_at_zero().inverse();
        Q = PolyMatrix::from_dense(inv);
        for (std::size_t j = 0; j < m; ++j)
            if (d[j] == 0)
                for (std::size_t i = 0; i < m; ++i) Q.at(i, j) = Poly::zero(P.modulus());
        return Q;
    }
    require_constant_invertible(P);

    // Buckets by truncation order: J_1 catches d_j <= 2*avg, bucket k the
    // range (2^{k-1} avg, 2^k avg]. High orders land in small buckets.
    const std::int64_t dsum = d.sum();
    const std::int64_t m64 = static_cast<std::int64_t>(m);
    const std::int64_t ell = std::max<std::int64_t>(1, ceil_log2(m64));
    std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(ell) + 1);
    for (std::size_t j = 0; j < m; ++j) {
        if (d[j] == 0) continue;  // stays a zero column
        std::int64_t k = 1;
        while (k < ell && m64 * d[j] > (std::int64_t{1} << k) * dsum) ++k;
        buckets[static_cast<std::size_t>(k)].push_back(j);
    }

    PartialLinearization pl = partial_linearization(P);
    const std::int64_t t = pl.expanded.degree();
    assert(t > 0);

    std::vector<std::int64_t> s_of_bucket(static_cast<std::size_t>(ell) + 1, 0);
    for (std::int64_t k = 1; k <= ell; ++k)
        s_of_bucket[static_cast<std::size_t>(k)] = ceil_div((std::int64_t{1} << k) * dsum, m64 * t);
    std::int64_t s_max = s_of_bucket[static_cast<std::size_t>(ell)];

    HighOrderComponents comps = high_order_comp(pl.expanded, std::max<std::int64_t>(0, ceil_log2(s_max) - 1));

    for (std::int64_t k = 1; k <= ell; ++k) {
        const auto& J = buckets[static_cast<std::size_t>(k)];
        if (J.empty()) continue;
        PolyMatrix E(pl.m_bar, J.size(), P.modulus());
        for (std::size_t c = 0; c < J.size(); ++c) E.at(J[c], c) = Poly::one(P.modulus());
        PolyMatrix F = series_sol(pl.expanded, E, s_of_bucket[static_cast<std::size_t>(k)], &comps);
        for (std::size_t c = 0; c < J.size(); ++c) {
            std::size_t j = J[c];
            for (std::size_t i = 0; i < m; ++i) Q.at(i, j) = F.at(i, c).truncated(d[j]);
        }
    }
    return Q;
}

PolyMatrix truncated_product(const PolyMatrix& F, const PolyMatrix& G, const DegreeTuple& d,
                             const TruncatedProductObserver& observer) {
    if (F.cols() != G.rows() || G.rows() != G.cols())
        throw DimensionError("truncated product dimension mismatch");
    const std::size_t m = G.cols();
    d.require_orders(m);
    PolyMatrix R(F.rows(), m, F.modulus());
    if (m == 0 || d.all_zero()) return R;

    DegreeTuple fdeg = F.cdeg();
    std::int64_t gamma = 0;
    for (std::size_t i = 0; i < F.cols(); ++i)
        if (!is_neg_inf(fdeg[i])) gamma += fdeg[i];
    const std::int64_t D = std::max(d.sum(), gamma);
    const std::int64_t m64 = static_cast<std::int64_t>(m);
    const std::int64_t delta = ceil_div(D, m64);
    const std::int64_t ell = std::max<std::int64_t>(1, ceil_log2(m64));
    const std::int64_t dmax = d.max();

    // Round 0: low chunk of F against all of G.
    R = pm_mul_truncated(F.truncate(2 * delta), G, dmax).col_truncate(d);
    if (observer) observer(0, R);

    for (std::int64_t k = 1; k < ell; ++k) {
        const std::int64_t cut = (std::int64_t{1} << k) * delta;
        std::vector<std::size_t> I, J;
        for (std::size_t i = 0; i < F.cols(); ++i)
            if (!is_neg_inf(fdeg[i]) && fdeg[i] >= cut) I.push_back(i);
        for (std::size_t j = 0; j < m; ++j)
            if (d[j] >= cut) J.push_back(j);
        if (!I.empty() && !J.empty()) {
            PolyMatrix Fk = F.select_cols(I).shift_down(cut).truncate(cut);
            PolyMatrix Gsub(I.size(), J.size(), F.modulus());
            for (std::size_t a = 0; a < I.size(); ++a)
                for (std::size_t b = 0; b < J.size(); ++b) Gsub.at(a, b) = G.at(I[a], J[b]);
            DegreeTuple e;
            e.values.reserve(J.size());
            for (std::size_t j : J) e.values.push_back(d[j] - cut);
            PolyMatrix prod = pm_mul_truncated(Fk, Gsub, e.max()).col_truncate(e);
            for (std::size_t b = 0; b < J.size(); ++b) {
                std::size_t j = J[b];
                for (std::size_t i = 0; i < R.rows(); ++i)
                    R.at(i, j) += prod.at(i, b).shifted_up(static_cast<std::size_t>(cut));
            }
        }
        if (observer) observer(static_cast<std::size_t>(k), R);
    }
    return R;
}

}  // namespace krylovium
