#include "krylovium/dense_matrix.hpp"

#include <stdexcept>

namespace krylovium {

std::size_t& strassen_threshold() {
    static std::size_t threshold = 0;  // off by default
    return threshold;
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<std::uint64_t>> rows, PrimeModulus mod)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), mod_(mod) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
        for (std::uint64_t v : r) a_.push_back(mod_.reduce(v));
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n, PrimeModulus mod) {
    DenseMatrix m(n, n, mod);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1 % mod.value();
    return m;
}

void DenseMatrix::check_same_field(const DenseMatrix& b) const {
    if (mod_ != b.mod_) throw ModulusMismatchError("matrices under different moduli");
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& b) const {
    check_same_field(b);
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix addition shape mismatch");
    DenseMatrix r(rows_, cols_, mod_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = mod_.add(a_[i], b.a_[i]);
    return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& b) const {
    check_same_field(b);
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix subtraction shape mismatch");
    DenseMatrix r(rows_, cols_, mod_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = mod_.sub(a_[i], b.a_[i]);
    return r;
}

namespace {

// Plain ikj product; used directly for p = 2 and as the base case for the
// Montgomery path below.
void mul_classical_plain(const DenseMatrix& A, const DenseMatrix& B, DenseMatrix& C,
                         const PrimeModulus& mod) {
    std::size_t n = A.rows(), k = A.cols(), m = B.cols();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            std::uint64_t a = A.at(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < m; ++j) {
                C.set(i, j, mod.add(C.at(i, j), mod.mul(a, B.at(l, j))));
            }
        }
    }
}

void mul_classical_montgomery(const DenseMatrix& A, const DenseMatrix& B, DenseMatrix& C,
                              const PrimeModulus& mod) {
    detail::MontgomeryDomain md(mod.value());
    std::size_t n = A.rows(), k = A.cols(), m = B.cols();
    std::vector<std::uint64_t> bm(k * m);
    for (std::size_t l = 0; l < k; ++l)
        for (std::size_t j = 0; j < m; ++j) bm[l * m + j] = md.to(B.at(l, j));
    std::vector<std::uint64_t> row(m);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t l = 0; l < k; ++l) {
            std::uint64_t a = A.at(i, l);
            if (a == 0) continue;
            std::uint64_t am = md.to(a);
            const std::uint64_t* brow = bm.data() + l * m;
            for (std::size_t j = 0; j < m; ++j) row[j] = md.add(row[j], md.mul(am, brow[j]));
        }
        for (std::size_t j = 0; j < m; ++j) C.set(i, j, md.from(row[j]));
    }
}

DenseMatrix mul_dispatch(const DenseMatrix& A, const DenseMatrix& B);

// One level of Strassen on even-size square blocks, classical below the
// configured threshold or on odd/rectangular shapes.
DenseMatrix mul_strassen(const DenseMatrix& A, const DenseMatrix& B) {
    std::size_t n = A.rows();
    const PrimeModulus& mod = A.modulus();
    std::size_t h = n / 2;
    auto blk = [&](const DenseMatrix& M, std::size_t bi, std::size_t bj) {
        DenseMatrix r(h, h, mod);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < h; ++j) r.set(i, j, M.at(bi * h + i, bj * h + j));
        return r;
    };
    DenseMatrix a11 = blk(A, 0, 0), a12 = blk(A, 0, 1), a21 = blk(A, 1, 0), a22 = blk(A, 1, 1);
    DenseMatrix b11 = blk(B, 0, 0), b12 = blk(B, 0, 1), b21 = blk(B, 1, 0), b22 = blk(B, 1, 1);

    DenseMatrix m1 = mul_dispatch(a11 + a22, b11 + b22);
    DenseMatrix m2 = mul_dispatch(a21 + a22, b11);
    DenseMatrix m3 = mul_dispatch(a11, b12 - b22);
    DenseMatrix m4 = mul_dispatch(a22, b21 - b11);
    DenseMatrix m5 = mul_dispatch(a11 + a12, b22);
    DenseMatrix m6 = mul_dispatch(a21 - a11, b11 + b12);
    DenseMatrix m7 = mul_dispatch(a12 - a22, b21 + b22);

    DenseMatrix c11 = m1 + m4 - m5 + m7;
    DenseMatrix c12 = m3 + m5;
    DenseMatrix c21 = m2 + m4;
    DenseMatrix c22 = m1 - m2 + m3 + m6;

    DenseMatrix C(n, n, A.modulus());
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            C.set(i, j, c11.at(i, j));
            C.set(i, j + h, c12.at(i, j));
            C.set(i + h, j, c21.at(i, j));
            C.set(i + h, j + h, c22.at(i, j));
        }
    return C;
}

DenseMatrix mul_dispatch(const DenseMatrix& A, const DenseMatrix& B) {
    DenseMatrix C(A.rows(), B.cols(), A.modulus());
    std::size_t th = strassen_threshold();
    if (th > 0 && A.rows() == A.cols() && B.rows() == B.cols() && A.rows() >= th && A.rows() % 2 == 0) {
        return mul_strassen(A, B);
    }
    if (A.rows() == 0 || A.cols() == 0 || B.cols() == 0) return C;
    if ((A.modulus().value() & 1) && static_cast<std::uint64_t>(A.rows()) * A.cols() * B.cols() > 4096) {
        mul_classical_montgomery(A, B, C, A.modulus());
    } else {
        mul_classical_plain(A, B, C, A.modulus());
    }
    return C;
}

}  // namespace

DenseMatrix DenseMatrix::operator*(const DenseMatrix& b) const {
    check_same_field(b);
    if (cols_ != b.rows_) throw DimensionError("matrix product inner dimension mismatch");
    return mul_dispatch(*this, b);
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix r(cols_, rows_, mod_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

DenseMatrix DenseMatrix::scaled(std::uint64_t c) const {
    c = mod_.reduce(c);
    DenseMatrix r(rows_, cols_, mod_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = mod_.mul(a_[i], c);
    return r;
}

bool DenseMatrix::is_zero() const {
    for (std::uint64_t v : a_)
        if (v) return false;
    return true;
}

DenseMatrix DenseMatrix::col_range(std::size_t c0, std::size_t c1) const {
    if (c0 > c1 || c1 > cols_) throw DimensionError("column range out of bounds");
    DenseMatrix r(rows_, c1 - c0, mod_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = c0; j < c1; ++j) r.set(i, j - c0, at(i, j));
    return r;
}

DenseMatrix DenseMatrix::row_range(std::size_t r0, std::size_t r1) const {
    if (r0 > r1 || r1 > rows_) throw DimensionError("row range out of bounds");
    DenseMatrix r(r1 - r0, cols_, mod_);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i - r0, j, at(i, j));
    return r;
}

DenseMatrix DenseMatrix::select_cols(std::span<const std::size_t> idx) const {
    DenseMatrix r(rows_, idx.size(), mod_);
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= cols_) throw DimensionError("column index out of bounds");
        for (std::size_t i = 0; i < rows_; ++i) r.set(i, j, at(i, idx[j]));
    }
    return r;
}

DenseMatrix DenseMatrix::hstack(const DenseMatrix& b) const {
    check_same_field(b);
    if (rows_ != b.rows_) throw DimensionError("hstack row mismatch");
    DenseMatrix r(rows_, cols_ + b.cols_, mod_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        for (std::size_t j = 0; j < b.cols_; ++j) r.set(i, cols_ + j, b.at(i, j));
    }
    return r;
}

void DenseMatrix::paste_cols(std::size_t c0, const DenseMatrix& src) {
    check_same_field(src);
    if (src.rows_ != rows_ || c0 + src.cols_ > cols_) throw DimensionError("paste_cols out of bounds");
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < src.cols_; ++j) set(i, c0 + j, src.at(i, j));
}

std::vector<std::size_t> DenseMatrix::col_rank_profile() const {
    // Incremental elimination, columns left to right. pivot_cols[r] is the
    // reduced image of a selected column, normalized at its pivot row.
    std::vector<std::vector<std::uint64_t>> pivot_cols;
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> profile;
    std::vector<std::uint64_t> v(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
            std::uint64_t c = v[pivot_rows[k]];
            if (c == 0) continue;
            const auto& pc = pivot_cols[k];
            for (std::size_t i = 0; i < rows_; ++i)
                if (pc[i]) v[i] = mod_.sub(v[i], mod_.mul(c, pc[i]));
        }
        std::size_t pr = rows_;
        for (std::size_t i = 0; i < rows_; ++i)
            if (v[i]) {
                pr = i;
                break;
            }
        if (pr == rows_) continue;
        std::uint64_t inv = mod_.inv(v[pr]);
        std::vector<std::uint64_t> pc(rows_);
        for (std::size_t i = 0; i < rows_; ++i) pc[i] = mod_.mul(v[i], inv);
        pivot_cols.push_back(std::move(pc));
        pivot_rows.push_back(pr);
        profile.push_back(j);
    }
    return profile;
}

std::size_t DenseMatrix::rank() const { return col_rank_profile().size(); }

PluqDecomposition DenseMatrix::pluq() const {
    std::size_t n = rows_, m = cols_;
    DenseMatrix w = *this;
    std::vector<std::size_t> rp(n), cp(m);
    for (std::size_t i = 0; i < n; ++i) rp[i] = i;
    for (std::size_t j = 0; j < m; ++j) cp[j] = j;

    std::size_t r = 0;
    while (r < n && r < m) {
        // Leftmost column (in current order) with a nonzero on/below row r,
        // topmost such entry.
        std::size_t pc = m, pr = n;
        for (std::size_t j = r; j < m && pc == m; ++j) {
            for (std::size_t i = r; i < n; ++i) {
                if (w.at(i, j) != 0) {
                    pc = j;
                    pr = i;
                    break;
                }
            }
        }
        if (pc == m) break;
        if (pr != r) {
            for (std::size_t j = 0; j < m; ++j) {
                std::uint64_t t = w.at(r, j);
                w.set(r, j, w.at(pr, j));
                w.set(pr, j, t);
            }
            std::swap(rp[r], rp[pr]);
        }
        if (pc != r) {
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t t = w.at(i, r);
                w.set(i, r, w.at(i, pc));
                w.set(i, pc, t);
            }
            std::swap(cp[r], cp[pc]);
        }
        std::uint64_t inv = mod_.inv(w.at(r, r));
        for (std::size_t i = r + 1; i < n; ++i) {
            std::uint64_t f = mod_.mul(w.at(i, r), inv);
            if (f == 0) continue;
            w.set(i, r, f);  // stores L below the diagonal
            for (std::size_t j = r + 1; j < m; ++j)
                w.set(i, j, mod_.sub(w.at(i, j), mod_.mul(f, w.at(r, j))));
        }
        ++r;
    }

    PluqDecomposition d{std::move(rp), std::move(cp), DenseMatrix(n, r, mod_), DenseMatrix(r, m, mod_), r};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r && j <= i; ++j)
            d.L.set(i, j, i == j ? 1 % mod_.value() : w.at(i, j));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < m; ++j) d.U.set(i, j, w.at(i, j));
    return d;
}

DenseMatrix PluqDecomposition::reconstruct() const {
    DenseMatrix lu = L * U;
    DenseMatrix m(lu.rows(), lu.cols(), lu.modulus());
    for (std::size_t i = 0; i < lu.rows(); ++i)
        for (std::size_t j = 0; j < lu.cols(); ++j) m.set(row_perm[i], col_perm[j], lu.at(i, j));
    return m;
}

namespace {

// Gauss-Jordan on [M | rhs] with deterministic topmost pivoting.
DenseMatrix eliminate_solve(const DenseMatrix& M, const DenseMatrix& rhs, const char* what) {
    if (M.rows() != M.cols()) throw DimensionError("matrix must be square");
    if (M.rows() != rhs.rows()) throw DimensionError("right-hand side row mismatch");
    const PrimeModulus& mod = M.modulus();
    std::size_t n = M.rows(), m = rhs.cols();
    DenseMatrix w = M.hstack(rhs);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = n;
        for (std::size_t i = k; i < n; ++i)
            if (w.at(i, k) != 0) {
                pr = i;
                break;
            }
        if (pr == n) throw SingularMatrixError(what, M.rank());
        if (pr != k)
            for (std::size_t j = 0; j < n + m; ++j) {
                std::uint64_t t = w.at(k, j);
                w.set(k, j, w.at(pr, j));
                w.set(pr, j, t);
            }
        std::uint64_t inv = mod.inv(w.at(k, k));
        for (std::size_t j = 0; j < n + m; ++j) w.set(k, j, mod.mul(w.at(k, j), inv));
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            std::uint64_t f = w.at(i, k);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n + m; ++j)
                w.set(i, j, mod.sub(w.at(i, j), mod.mul(f, w.at(k, j))));
        }
    }
    return w.col_range(n, n + m);
}

}  // namespace

DenseMatrix DenseMatrix::inverse() const {
    return eliminate_solve(*this, identity(rows_, mod_), "matrix not invertible");
}

DenseMatrix DenseMatrix::solve(const DenseMatrix& rhs) const {
    check_same_field(rhs);
    return eliminate_solve(*this, rhs, "singular system");
}

}  // namespace krylovium
