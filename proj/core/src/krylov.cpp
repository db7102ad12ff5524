#include "krylovium/krylov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "krylovium/lifting.hpp"

namespace krylovium {

KrylovSpec::KrylovSpec(DenseMatrix a, DenseMatrix u) : A(std::move(a)), U(std::move(u)) {
    if (A.rows() != A.cols()) throw DimensionError("A must be square");
    if (U.rows() != A.rows()) throw DimensionError("U must have as many rows as A");
    if (A.modulus() != U.modulus()) throw ModulusMismatchError("A and U under different moduli");
}

double AlgoConfig::derived_c() const {
    if (!(omega > 2.0 && omega <= 3.0)) throw std::invalid_argument("omega must lie in (2, 3]");
    if (!(c1 > 0.0)) throw std::invalid_argument("c1 must be positive");
    return std::max(4.0 / (omega - 2.0), c1 / (omega - 1.0));
}

std::int64_t AlgoConfig::threshold(std::size_t n) const {
    double c = derived_c();
    double t = std::pow(std::log2(static_cast<double>(n)), c);
    if (t >= 9.0e18) return std::int64_t{4'000'000'000'000'000'000};
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(t)));
}

DenseMatrix naive_krylov_matrix(const KrylovSpec& spec, const DegreeTuple& d) {
    d.require_orders(spec.m());
    DenseMatrix K(spec.n(), static_cast<std::size_t>(d.sum()), spec.A.modulus());
    std::size_t off = 0;
    for (std::size_t j = 0; j < spec.m(); ++j) {
        DenseMatrix v = spec.U.col_range(j, j + 1);
        for (std::int64_t k = 0; k < d[j]; ++k) {
            K.paste_cols(off++, v);
            if (k + 1 < d[j]) v = spec.A * v;
        }
    }
    return K;
}

namespace {

// Incremental span tracker: normalized pivot columns plus their pivot rows.
class SpanTracker {
public:
    explicit SpanTracker(const PrimeModulus& mod, std::size_t n) : mod_(mod), n_(n) {}

    std::size_t dim() const { return pivot_rows_.size(); }

    /// Reduces v against the span; if independent, absorbs it and returns
    /// true, otherwise returns false.
    bool absorb(std::vector<std::uint64_t> v) {
        for (std::size_t k = 0; k < pivot_rows_.size(); ++k) {
            std::uint64_t c = v[pivot_rows_[k]];
            if (c == 0) continue;
            const auto& pc = cols_[k];
            for (std::size_t i = 0; i < n_; ++i)
                if (pc[i]) v[i] = mod_.sub(v[i], mod_.mul(c, pc[i]));
        }
        std::size_t pr = n_;
        for (std::size_t i = 0; i < n_; ++i)
            if (v[i]) {
                pr = i;
                break;
            }
        if (pr == n_) return false;
        std::uint64_t inv = mod_.inv(v[pr]);
        for (std::size_t i = 0; i < n_; ++i) v[i] = mod_.mul(v[i], inv);
        cols_.push_back(std::move(v));
        pivot_rows_.push_back(pr);
        return true;
    }

private:
    PrimeModulus mod_;
    std::size_t n_;
    std::vector<std::vector<std::uint64_t>> cols_;
    std::vector<std::size_t> pivot_rows_;
};

std::vector<std::uint64_t> column_of(const DenseMatrix& M, std::size_t j) {
    std::vector<std::uint64_t> v(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) v[i] = M.at(i, j);
    return v;
}

std::vector<std::uint64_t> mat_vec(const DenseMatrix& A, const std::vector<std::uint64_t>& v) {
    const PrimeModulus& mod = A.modulus();
    std::vector<std::uint64_t> w(A.rows(), 0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (A.at(i, j) && v[j]) acc = mod.add(acc, mod.mul(A.at(i, j), v[j]));
        w[i] = acc;
    }
    return w;
}

}  // namespace

DegreeTuple naive_max_indices(const KrylovSpec& spec) {
    SpanTracker span(spec.A.modulus(), spec.n());
    DegreeTuple d;
    d.values.reserve(spec.m());
    for (std::size_t j = 0; j < spec.m(); ++j) {
        std::vector<std::uint64_t> v = column_of(spec.U, j);
        std::int64_t k = 0;
        while (span.absorb(v)) {
            v = mat_vec(spec.A, v);
            ++k;
        }
        d.values.push_back(k);
    }
    return d;
}

namespace {

PolyMatrix build_pencil(const KrylovSpec& spec, bool x_times_identity) {
    // [xI - A | -U] when x_times_identity, else [I - xA | -U]
    const PrimeModulus& mod = spec.A.modulus();
    std::size_t n = spec.n(), m = spec.m();
    PolyMatrix F(n, n + m, mod);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::uint64_t> coeffs(2, 0);
            if (x_times_identity) {
                coeffs[0] = mod.neg(spec.A.at(i, j));
                coeffs[1] = (i == j) ? 1 % mod.value() : 0;
            } else {
                coeffs[0] = (i == j) ? 1 % mod.value() : 0;
                coeffs[1] = mod.neg(spec.A.at(i, j));
            }
            F.at(i, j) = Poly(std::move(coeffs), mod);
        }
        for (std::size_t j = 0; j < m; ++j)
            F.at(i, n + j) = Poly::constant(mod.neg(spec.U.at(i, j)), mod);
    }
    return F;
}

DegreeTuple hermite_degrees(const PolyMatrix& T) {
    DegreeTuple d;
    d.values.reserve(T.rows());
    for (const Poly& h : hermite_diagonal(T)) d.values.push_back(h.degree());
    return d;
}

// Shared tail of the series approach: expand S T^{-1} = sum_k x^k A^k U
// column-wise to the requested orders and linearize the coefficients.
DenseMatrix series_krylov_tail(const PolyMatrix& S, const PolyMatrix& T, const KrylovSpec& spec,
                               const DegreeTuple& d) {
    PolyMatrix Q = truncated_inverse(T, d);
    PolyMatrix P = truncated_product(S, Q, d);
    return P.expand_columns(d);
}

}  // namespace

DegreeTuple max_indices(const KrylovSpec& spec) {
    if (spec.m() == 0) return DegreeTuple{};
    KernelBasisResult kb = minimal_kernel_basis(build_pencil(spec, /*x_times_identity=*/true));
    return hermite_degrees(kb.bottom());
}

DenseMatrix krylov_matrix(const KrylovSpec& spec, const DegreeTuple& d) {
    d.require_orders(spec.m());
    if (spec.m() == 0) return DenseMatrix(spec.n(), 0, spec.A.modulus());
    KernelBasisResult kb = minimal_kernel_basis(build_pencil(spec, /*x_times_identity=*/false));
    return series_krylov_tail(kb.top(), kb.bottom(), spec, d);
}

std::pair<PolyMatrix, PolyMatrix> reverse_kernel_transform(const PolyMatrix& S, const PolyMatrix& T,
                                                           std::size_t n) {
    if (S.rows() != n) throw DimensionError("numerator block has wrong row count");
    if (T.rows() != T.cols() || S.cols() != T.cols()) throw DimensionError("kernel block shapes disagree");
    DegreeTuple d = T.cdeg();
    DegreeTuple d_top, d_bot;
    d_top.values.reserve(d.size());
    d_bot.values.reserve(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (is_neg_inf(d[j])) throw std::invalid_argument("denominator block has a zero column");
        d_bot.values.push_back(d[j]);
        d_top.values.push_back(d[j] > 0 ? d[j] - 1 : 0);
    }
    DegreeTuple s_cdeg = S.cdeg();
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (d[j] == 0 && !is_neg_inf(s_cdeg[j]))
            throw std::invalid_argument("numerator column must vanish where the denominator is constant");
        if (!is_neg_inf(s_cdeg[j]) && s_cdeg[j] > d_top[j])
            throw std::invalid_argument("numerator column degree must stay below the denominator's");
    }
    return {S.col_reverse(d_top), T.col_reverse(d_bot)};
}

namespace {

struct LoopState {
    std::vector<DenseMatrix> blocks;       // V_j = K(A, u_j, delta_j)
    std::vector<std::int64_t> delta;
};

// One branching round: extend the chains in J with B * V_j, then either prune
// by a rank profile (maximal-basis mode) or clip at the target orders d.
void branching_round(const KrylovSpec& spec, const DenseMatrix& B, LoopState& st, std::int64_t two_i,
                     const DegreeTuple* targets) {
    std::size_t m = st.blocks.size();
    std::vector<std::size_t> J;
    for (std::size_t j = 0; j < m; ++j)
        if (st.delta[j] == two_i) J.push_back(j);
    if (J.empty()) return;

    std::size_t sel_cols = 0;
    for (std::size_t j : J) sel_cols += st.blocks[j].cols();
    DenseMatrix sel(spec.n(), sel_cols, spec.A.modulus());
    std::size_t off = 0;
    for (std::size_t j : J) {
        sel.paste_cols(off, st.blocks[j]);
        off += st.blocks[j].cols();
    }
    DenseMatrix W = B * sel;

    if (targets == nullptr) {
        // Z = [V_1 W_1 ... V_m W_m]; new delta_j = longest prefix of block j
        // fully inside the column rank profile of Z.
        std::size_t zcols = 0;
        for (std::size_t j = 0; j < m; ++j) zcols += st.blocks[j].cols();
        zcols += W.cols();
        DenseMatrix Z(spec.n(), zcols, spec.A.modulus());
        std::vector<std::size_t> block_start(m), block_width(m);
        std::size_t zoff = 0, woff = 0;
        std::size_t jsel = 0;
        for (std::size_t j = 0; j < m; ++j) {
            block_start[j] = zoff;
            Z.paste_cols(zoff, st.blocks[j]);
            zoff += st.blocks[j].cols();
            std::size_t w = 0;
            if (jsel < J.size() && J[jsel] == j) {
                w = st.blocks[j].cols();
                Z.paste_cols(zoff, W.col_range(woff, woff + w));
                woff += w;
                zoff += w;
                ++jsel;
            }
            block_width[j] = st.blocks[j].cols() + w;
        }
        std::vector<std::size_t> profile = Z.col_rank_profile();
        std::vector<char> in_profile(zcols, 0);
        for (std::size_t c : profile) in_profile[c] = 1;
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t run = 0;
            while (run < block_width[j] && in_profile[block_start[j] + run]) ++run;
            st.delta[j] = static_cast<std::int64_t>(run);
            st.blocks[j] = Z.col_range(block_start[j], block_start[j] + run);
        }
    } else {
        std::size_t woff = 0;
        for (std::size_t j : J) {
            std::size_t w = st.blocks[j].cols();
            std::int64_t target = (*targets)[j];
            std::int64_t grown = std::min<std::int64_t>(2 * st.delta[j], target);
            DenseMatrix ext = st.blocks[j].hstack(W.col_range(woff, woff + w));
            st.blocks[j] = ext.col_range(0, static_cast<std::size_t>(grown));
            st.delta[j] = grown;
            woff += w;
        }
    }
}

LoopState run_branching_loop(const KrylovSpec& spec, std::int64_t rounds, const DegreeTuple* targets,
                             const KrylovLoopObserver& observer) {
    LoopState st;
    std::size_t m = spec.m();
    st.blocks.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        std::int64_t start = targets ? std::min<std::int64_t>(1, (*targets)[j]) : 1;
        st.blocks.push_back(spec.U.col_range(j, j + 1).col_range(0, static_cast<std::size_t>(start)));
        st.delta.push_back(start);
    }
    DenseMatrix B = spec.A;
    for (std::int64_t i = 0; i < rounds; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < m; ++j) any = any || (st.delta[j] == (std::int64_t{1} << i));
        if (!any) break;
        branching_round(spec, B, st, std::int64_t{1} << i, targets);
        if (observer) {
            DenseMatrix V(spec.n(), 0, spec.A.modulus());
            for (const auto& b : st.blocks) V = V.hstack(b);
            observer(static_cast<std::size_t>(i), V, st.delta);
        }
        if (i + 1 < rounds) B = B * B;
    }
    return st;
}

KrylovBasisResult basis_from_blocks(const std::vector<DenseMatrix>& blocks, const PrimeModulus& mod,
                                    std::size_t n) {
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.cols();
    DenseMatrix K(n, total, mod);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        K.paste_cols(off, b);
        off += b.cols();
    }
    // The rank profile of concatenated chains picks exactly the per-block
    // maximal prefixes.
    std::vector<std::size_t> profile = K.col_rank_profile();
    std::vector<char> in_profile(total, 0);
    for (std::size_t c : profile) in_profile[c] = 1;

    KrylovBasisResult res{DenseMatrix(n, profile.size(), mod), DegreeTuple{}, {}};
    std::size_t boff = 0, out = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        std::size_t run = 0;
        while (run < blocks[j].cols() && in_profile[boff + run]) ++run;
        res.indices.values.push_back(static_cast<std::int64_t>(run));
        for (std::size_t k = 0; k < run; ++k) {
            res.basis.paste_cols(out++, blocks[j].col_range(k, k + 1));
            res.column_labels.emplace_back(j, k);
        }
        boff += blocks[j].cols();
    }
    return res;
}

std::int64_t ceil_log2_i64(std::int64_t v) {
    std::int64_t k = 0;
    while ((std::int64_t{1} << k) < v) ++k;
    return k;
}

// MaxIndices + KrylovMatrix in succession share one kernel basis: the
// [xI - A | -U] basis feeds the Hermite degrees, and its reversal feeds the
// series expansion.
KrylovBasisResult polynomial_basis(const KrylovSpec& spec) {
    std::size_t n = spec.n(), m = spec.m();
    const PrimeModulus& mod = spec.A.modulus();
    if (m == 0) return {DenseMatrix(n, 0, mod), DegreeTuple{}, {}};
    KernelBasisResult kb = minimal_kernel_basis(build_pencil(spec, /*x_times_identity=*/true));
    DegreeTuple d = hermite_degrees(kb.bottom());
    auto [s_hat, t_hat] = reverse_kernel_transform(kb.top(), kb.bottom(), n);
    DenseMatrix K = series_krylov_tail(s_hat, t_hat, spec, d);

    KrylovBasisResult res{std::move(K), std::move(d), {}};
    for (std::size_t j = 0; j < m; ++j)
        for (std::int64_t k = 0; k < res.indices[j]; ++k) res.column_labels.emplace_back(j, static_cast<std::size_t>(k));
    return res;
}

KrylovBasisResult naive_basis(const KrylovSpec& spec) {
    DegreeTuple d = naive_max_indices(spec);
    DenseMatrix K = naive_krylov_matrix(spec, d);
    KrylovBasisResult res{std::move(K), std::move(d), {}};
    for (std::size_t j = 0; j < spec.m(); ++j)
        for (std::int64_t k = 0; k < res.indices[j]; ++k) res.column_labels.emplace_back(j, static_cast<std::size_t>(k));
    return res;
}

}  // namespace

KrylovBasisResult keller_gehrig_basis(const KrylovSpec& spec, const KrylovLoopObserver& observer) {
    std::size_t n = spec.n();
    std::int64_t rounds = n <= 1 ? 1 : ceil_log2_i64(static_cast<std::int64_t>(n)) + 1;
    LoopState st = run_branching_loop(spec, rounds, nullptr, observer);
    return basis_from_blocks(st.blocks, spec.A.modulus(), n);
}

KrylovBasisResult max_krylov_basis(const KrylovSpec& spec, const AlgoConfig& config) {
    switch (config.strategy) {
        case Strategy::keller_gehrig:
            return keller_gehrig_basis(spec);
        case Strategy::naive:
            return naive_basis(spec);
        case Strategy::polmat_only:
            return polynomial_basis(spec);
        case Strategy::hybrid:
            break;
    }
    std::size_t n = spec.n(), m = spec.m();
    if (n <= 1) return polynomial_basis(spec);
    std::int64_t thres = config.threshold(n);
    if (static_cast<std::int64_t>(m) * thres <= static_cast<std::int64_t>(n)) return polynomial_basis(spec);

    std::int64_t ell = ceil_log2_i64(thres);
    LoopState st = run_branching_loop(spec, ell, nullptr, {});

    std::vector<std::size_t> J;
    for (std::size_t j = 0; j < m; ++j)
        if (st.delta[j] == (std::int64_t{1} << ell)) J.push_back(j);

    if (!J.empty()) {
        KrylovSpec sub(spec.A, spec.U.select_cols(J));
        KrylovBasisResult long_part = polynomial_basis(sub);
        std::size_t off = 0;
        for (std::size_t idx = 0; idx < J.size(); ++idx) {
            std::size_t width = static_cast<std::size_t>(long_part.indices[idx]);
            st.blocks[J[idx]] = long_part.basis.col_range(off, off + width);
            off += width;
        }
    }
    return basis_from_blocks(st.blocks, spec.A.modulus(), n);
}

DenseMatrix krylov_matrix_hybrid(const KrylovSpec& spec, const DegreeTuple& d, const AlgoConfig& config) {
    d.require_orders(spec.m());
    std::size_t n = spec.n(), m = spec.m();
    if (m == 0) return DenseMatrix(n, 0, spec.A.modulus());
    if (n <= 1 || static_cast<std::int64_t>(m) * config.threshold(n) <= static_cast<std::int64_t>(n))
        return krylov_matrix(spec, d);

    std::int64_t ell = ceil_log2_i64(config.threshold(n));
    LoopState st = run_branching_loop(spec, ell, &d, {});

    std::vector<std::size_t> J;
    for (std::size_t j = 0; j < m; ++j)
        if (st.delta[j] == (std::int64_t{1} << ell)) J.push_back(j);

    if (!J.empty()) {
        KrylovSpec sub(spec.A, spec.U.select_cols(J));
        DegreeTuple dJ;
        for (std::size_t j : J) dJ.values.push_back(d[j]);
        DenseMatrix KJ = krylov_matrix(sub, dJ);
        std::size_t off = 0;
        for (std::size_t idx = 0; idx < J.size(); ++idx) {
            std::size_t width = static_cast<std::size_t>(dJ[idx]);
            st.blocks[J[idx]] = KJ.col_range(off, off + width);
            off += width;
        }
    }
    DenseMatrix K(n, static_cast<std::size_t>(d.sum()), spec.A.modulus());
    std::size_t off = 0;
    for (std::size_t j = 0; j < m; ++j) {
        K.paste_cols(off, st.blocks[j]);
        off += st.blocks[j].cols();
    }
    return K;
}

}  // namespace krylovium
