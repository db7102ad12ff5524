#include "krylovium/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "krylovium/ntt.hpp"

namespace krylovium {

void DegreeTuple::require_orders(std::size_t expected_size) const {
    if (values.size() != expected_size) throw DimensionError("order tuple length mismatch");
    for (auto v : values)
        if (v < 0) throw std::invalid_argument("orders must be naturals");
}

std::string DegreeTuple::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ' ';
        s += is_neg_inf(values[i]) ? std::string("-inf") : std::to_string(values[i]);
    }
    return s;
}

PolyMatrix PolyMatrix::identity(std::size_t n, PrimeModulus mod) {
    PolyMatrix m(n, n, mod);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one(mod);
    return m;
}

PolyMatrix PolyMatrix::from_dense(const DenseMatrix& d) {
    PolyMatrix m(d.rows(), d.cols(), d.modulus());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (d.at(i, j)) m.at(i, j) = Poly::constant(d.at(i, j), d.modulus());
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

std::int64_t PolyMatrix::degree() const {
    std::int64_t d = kNegInfDegree;
    for (const auto& p : e_) d = std::max(d, p.degree());
    return d;
}

DegreeTuple PolyMatrix::cdeg() const {
    DegreeTuple d;
    d.values.assign(cols_, kNegInfDegree);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) d.values[j] = std::max(d.values[j], at(i, j).degree());
    return d;
}

PolyMatrix PolyMatrix::col_truncate(const DegreeTuple& d) const {
    d.require_orders(cols_);
    PolyMatrix r(rows_, cols_, mod_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, j).truncated(d[j]);
    return r;
}

PolyMatrix PolyMatrix::truncate(std::int64_t d) const {
    PolyMatrix r(rows_, cols_, mod_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].truncated(d);
    return r;
}

PolyMatrix PolyMatrix::shift_down(std::int64_t k) const {
    if (k < 0) throw std::invalid_argument("shift must be >= 0");
    PolyMatrix r(rows_, cols_, mod_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].shifted_down(static_cast<std::size_t>(k));
    return r;
}

PolyMatrix PolyMatrix::shift_up(std::int64_t k) const {
    if (k < 0) throw std::invalid_argument("shift must be >= 0");
    PolyMatrix r(rows_, cols_, mod_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].shifted_up(static_cast<std::size_t>(k));
    return r;
}

DenseMatrix PolyMatrix::coeff(std::int64_t k) const {
    if (k < 0) throw std::invalid_argument("coefficient index must be >= 0");
    DenseMatrix r(rows_, cols_, mod_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j).coeff(static_cast<std::size_t>(k)));
    return r;
}

DenseMatrix PolyMatrix::eval_at(std::uint64_t x0) const {
    DenseMatrix r(rows_, cols_, mod_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j).eval(x0));
    return r;
}

PolyMatrix PolyMatrix::col_reverse(const DegreeTuple& d) const {
    d.require_orders(cols_);
    PolyMatrix r(rows_, cols_, mod_);
    for (std::size_t j = 0; j < cols_; ++j) {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (at(i, j).degree() > d[j]) throw std::invalid_argument("column degree exceeds reversal order");
            r.at(i, j) = at(i, j).reversed(d[j]);
        }
    }
    return r;
}

DenseMatrix PolyMatrix::leading_matrix() const {
    DegreeTuple d = cdeg();
    DenseMatrix r(rows_, cols_, mod_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (is_neg_inf(d[j])) throw std::invalid_argument("leading matrix undefined on zero column");
        for (std::size_t i = 0; i < rows_; ++i)
            r.set(i, j, at(i, j).coeff(static_cast<std::size_t>(d[j])));
    }
    return r;
}

bool PolyMatrix::is_column_reduced() const { return leading_matrix().rank() == cols_; }

DenseMatrix PolyMatrix::expand_columns(const DegreeTuple& d) const {
    d.require_orders(cols_);
    DenseMatrix r(rows_, static_cast<std::size_t>(d.sum()), mod_);
    std::size_t off = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
        for (std::int64_t k = 0; k < d[j]; ++k, ++off)
            for (std::size_t i = 0; i < rows_; ++i)
                r.set(i, off, at(i, j).coeff(static_cast<std::size_t>(k)));
    }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& b) const {
    if (mod_ != b.mod_) throw ModulusMismatchError("polynomial matrices under different moduli");
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("polynomial matrix addition shape mismatch");
    PolyMatrix r(rows_, cols_, mod_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + b.e_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& b) const {
    if (mod_ != b.mod_) throw ModulusMismatchError("polynomial matrices under different moduli");
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("polynomial matrix subtraction shape mismatch");
    PolyMatrix r(rows_, cols_, mod_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - b.e_[i];
    return r;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix r(cols_, rows_, mod_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::select_cols(std::span<const std::size_t> idx) const {
    PolyMatrix r(rows_, idx.size(), mod_);
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= cols_) throw DimensionError("column index out of bounds");
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    }
    return r;
}

PolyMatrix PolyMatrix::col_range(std::size_t c0, std::size_t c1) const {
    if (c0 > c1 || c1 > cols_) throw DimensionError("column range out of bounds");
    PolyMatrix r(rows_, c1 - c0, mod_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = c0; j < c1; ++j) r.at(i, j - c0) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::row_range(std::size_t r0, std::size_t r1) const {
    if (r0 > r1 || r1 > rows_) throw DimensionError("row range out of bounds");
    PolyMatrix r(r1 - r0, cols_, mod_);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i - r0, j) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::hstack(const PolyMatrix& b) const {
    if (mod_ != b.mod_) throw ModulusMismatchError("polynomial matrices under different moduli");
    if (rows_ != b.rows_) throw DimensionError("hstack row mismatch");
    PolyMatrix r(rows_, cols_ + b.cols_, mod_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, cols_ + j) = b.at(i, j);
    }
    return r;
}

PolyMatrix PolyMatrix::vstack(const PolyMatrix& b) const {
    if (mod_ != b.mod_) throw ModulusMismatchError("polynomial matrices under different moduli");
    if (cols_ != b.cols_) throw DimensionError("vstack column mismatch");
    PolyMatrix r(rows_ + b.rows_, cols_, mod_);
    for (std::size_t j = 0; j < cols_; ++j) {
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i) r.at(rows_ + i, j) = b.at(i, j);
    }
    return r;
}

PolyMatrix pm_add(const PolyMatrix& a, const PolyMatrix& b) { return a + b; }

namespace {

PolyMatrix pm_mul_naive(const PolyMatrix& a, const PolyMatrix& b, std::int64_t order) {
    PolyMatrix r(a.rows(), b.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Poly& f = a.at(i, k);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Poly& g = b.at(k, j);
                if (g.is_zero()) continue;
                Poly prod = f * g;
                if (order >= 0) prod = prod.truncated(order);
                r.at(i, j) += prod;
            }
        }
    }
    return r;
}

// Entrywise NTT, pointwise constant products in the Montgomery domain,
// entrywise inverse transform. The right operand is processed in column
// strips to bound peak memory on large instances.
bool pm_mul_ntt(const PolyMatrix& a, const PolyMatrix& b, std::int64_t order, PolyMatrix& out) {
    std::int64_t da = a.degree(), db = b.degree();
    if (is_neg_inf(da) || is_neg_inf(db)) return false;
    std::size_t result_len = static_cast<std::size_t>(da + db) + 1;
    if (order >= 0) result_len = std::min(result_len, static_cast<std::size_t>(order));
    if (result_len == 0) return false;
    std::size_t full_len = static_cast<std::size_t>(da + db) + 1;
    std::size_t len = detail::next_pow2(full_len);
    std::uint64_t p = a.modulus().value();
    if (!detail::ntt_available(p, len)) return false;

    std::size_t r = a.rows(), k = a.cols(), c = b.cols();
    detail::MontgomeryDomain md(p);
    detail::NttPlan plan(md, len);

    std::vector<std::uint64_t> ahat(r * k * len);
    std::vector<std::uint64_t> buf(len);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            const auto& cs = a.at(i, l).coeffs();
            std::fill(buf.begin(), buf.end(), 0);
            for (std::size_t t = 0; t < cs.size(); ++t) buf[t] = md.to(cs[t]);
            plan.forward(buf.data());
            std::copy(buf.begin(), buf.end(), ahat.begin() + static_cast<std::ptrdiff_t>((i * k + l) * len));
        }
    }

    out = PolyMatrix(r, c, a.modulus());
    const std::size_t strip = std::max<std::size_t>(1, (std::size_t{1} << 24) / (std::max<std::size_t>(k, 1) * len));
    std::vector<std::uint64_t> bhat, acc;
    for (std::size_t j0 = 0; j0 < c; j0 += strip) {
        std::size_t j1 = std::min(c, j0 + strip), w = j1 - j0;
        bhat.assign(k * w * len, 0);
        for (std::size_t l = 0; l < k; ++l) {
            for (std::size_t j = j0; j < j1; ++j) {
                const auto& cs = b.at(l, j).coeffs();
                std::uint64_t* dst = bhat.data() + (l * w + (j - j0)) * len;
                for (std::size_t t = 0; t < cs.size(); ++t) dst[t] = md.to(cs[t]);
                plan.forward(dst);
            }
        }
        acc.assign(w * len, 0);
        for (std::size_t i = 0; i < r; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t l = 0; l < k; ++l) {
                const std::uint64_t* arow = ahat.data() + (i * k + l) * len;
                for (std::size_t j = 0; j < w; ++j) {
                    const std::uint64_t* brow = bhat.data() + (l * w + j) * len;
                    std::uint64_t* dst = acc.data() + j * len;
                    for (std::size_t t = 0; t < len; ++t) dst[t] = md.add(dst[t], md.mul(arow[t], brow[t]));
                }
            }
            for (std::size_t j = 0; j < w; ++j) {
                std::uint64_t* dst = acc.data() + j * len;
                plan.inverse(dst);
                std::vector<std::uint64_t> cs(result_len);
                for (std::size_t t = 0; t < result_len; ++t) cs[t] = md.from(dst[t]);
                out.at(i, j0 + j) = Poly(std::move(cs), a.modulus());
            }
        }
    }
    return true;
}

PolyMatrix pm_mul_impl(const PolyMatrix& a, const PolyMatrix& b, std::int64_t order) {
    if (a.modulus() != b.modulus()) throw ModulusMismatchError("polynomial matrices under different moduli");
    if (a.cols() != b.rows()) throw DimensionError("polynomial matrix product inner dimension mismatch");
    if (order == 0 || a.rows() == 0 || b.cols() == 0 || a.cols() == 0)
        return PolyMatrix(a.rows(), b.cols(), a.modulus());
    std::int64_t da = a.degree(), db = b.degree();
    if (is_neg_inf(da) || is_neg_inf(db)) return PolyMatrix(a.rows(), b.cols(), a.modulus());
    // Rough op-count of the naive convolution route; switch to NTT when big.
    double work = static_cast<double>(a.rows()) * static_cast<double>(a.cols()) *
                  static_cast<double>(b.cols()) * static_cast<double>(da + 1) * static_cast<double>(db + 1);
    if (work > 1e7) {
        PolyMatrix out(a.rows(), b.cols(), a.modulus());
        if (pm_mul_ntt(a, b, order, out)) return out;
    }
    return pm_mul_naive(a, b, order);
}

}  // namespace

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b) { return pm_mul_impl(a, b, -1); }

PolyMatrix pm_mul_truncated(const PolyMatrix& a, const PolyMatrix& b, std::int64_t order) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    return pm_mul_impl(a, b, order);
}

PartialLinearization partial_linearization(const PolyMatrix& P) {
    if (P.rows() != P.cols()) throw DimensionError("partial linearization needs a square matrix");
    const std::size_t m = P.rows();
    const PrimeModulus& mod = P.modulus();
    std::int64_t deg = P.degree();
    if (m == 0 || deg <= 0) return {P, 0, m};

    DegreeTuple cd = P.cdeg();
    std::int64_t t = std::max<std::int64_t>(1, (cd.sum() + static_cast<std::int64_t>(m) - 1) / static_cast<std::int64_t>(m));

    // Columns of degree > t are split into chunks of width t; each extra
    // chunk brings one new column and one constraint row x^t * (new) = (prev).
    struct Chunk {
        std::size_t col;
        std::size_t index;  // 1-based chunk number within its column
    };
    std::vector<Chunk> chunks;
    std::vector<std::size_t> num_chunks(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        std::int64_t dj = is_neg_inf(cd[j]) ? 0 : cd[j];
        if (dj <= t) continue;
        std::size_t k = static_cast<std::size_t>((dj + 1 + t - 1) / t) - 1;  // ceil((dj+1)/t) - 1
        num_chunks[j] = k;
        for (std::size_t i = 1; i <= k; ++i) chunks.push_back({j, i});
    }
    if (chunks.empty()) return {P, t, m};

    const std::size_t m_bar = m + chunks.size();
    PolyMatrix out(m_bar, m_bar, mod);

    // Principal block: chunk 0 of each column.
    for (std::size_t j = 0; j < m; ++j) {
        std::int64_t cut = num_chunks[j] ? t : kNegInfDegree;
        for (std::size_t i = 0; i < m; ++i)
            out.at(i, j) = num_chunks[j] ? P.at(i, j).truncated(cut) : P.at(i, j);
    }
    // Extra columns hold the higher chunks; extra rows tie them together.
    for (std::size_t e = 0; e < chunks.size(); ++e) {
        const auto [j, idx] = chunks[e];
        std::size_t col = m + e;
        for (std::size_t i = 0; i < m; ++i) {
            Poly chunk = P.at(i, j).shifted_down(static_cast<std::size_t>(t) * idx).truncated(t);
            out.at(i, col) = std::move(chunk);
        }
        out.at(col, col) = Poly::one(mod);
        // -x^t against the previous variable in this column's chain.
        Poly minus_xt = Poly::monomial(mod.neg(1), static_cast<std::size_t>(t), mod);
        if (idx == 1) {
            out.at(col, j) = minus_xt;
        } else {
            out.at(col, col - 1) = minus_xt;
        }
    }
    return {out, t, m_bar};
}

}  // namespace krylovium
