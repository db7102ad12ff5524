#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "krylovium/dense_matrix.hpp"
#include "krylovium/poly.hpp"

namespace krylovium {

/// Tuple of column degrees / truncation orders / chain lengths. Entries are
/// naturals or kNegInfDegree; sum() skips the sentinel.
struct DegreeTuple {
    std::vector<std::int64_t> values;

    DegreeTuple() = default;
    explicit DegreeTuple(std::vector<std::int64_t> v) : values(std::move(v)) {}
    DegreeTuple(std::initializer_list<std::int64_t> v) : values(v) {}

    static DegreeTuple uniform(std::size_t n, std::int64_t v) {
        return DegreeTuple(std::vector<std::int64_t>(n, v));
    }

    std::size_t size() const { return values.size(); }
    std::int64_t operator[](std::size_t i) const { return values[i]; }

    std::int64_t sum() const {
        std::int64_t s = 0;
        for (auto v : values)
            if (!is_neg_inf(v)) s += v;
        return s;
    }

    std::int64_t max() const {
        std::int64_t m = kNegInfDegree;
        for (auto v : values)
            if (v > m) m = v;
        return m;
    }

    bool all_zero() const {
        for (auto v : values)
            if (v != 0) return false;
        return true;
    }

    /// Throws unless every entry is a natural (>= 0).
    void require_orders(std::size_t expected_size) const;

    bool operator==(const DegreeTuple&) const = default;

    std::string to_string() const;
};

/// Matrix of polynomials over GF(p). Row/column counts of zero are legal.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, PrimeModulus mod)
        : rows_(rows), cols_(cols), e_(rows * cols, Poly(mod)), mod_(mod) {}

    static PolyMatrix identity(std::size_t n, PrimeModulus mod);
    static PolyMatrix from_dense(const DenseMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeModulus& modulus() const { return mod_; }

    const Poly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Poly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    bool operator==(const PolyMatrix& b) const {
        return rows_ == b.rows_ && cols_ == b.cols_ && mod_ == b.mod_ && e_ == b.e_;
    }

    bool is_zero() const;

    /// Max entry degree; kNegInfDegree for the zero matrix.
    std::int64_t degree() const;
    /// Per-column max entry degree, kNegInfDegree on zero columns.
    DegreeTuple cdeg() const;

    /// Column j reduced mod x^{d_j}; d must consist of naturals.
    PolyMatrix col_truncate(const DegreeTuple& d) const;
    /// All entries reduced mod x^d.
    PolyMatrix truncate(std::int64_t d) const;
    /// All entries divided by x^k (coefficients below k dropped).
    PolyMatrix shift_down(std::int64_t k) const;
    PolyMatrix shift_up(std::int64_t k) const;

    DenseMatrix coeff(std::int64_t k) const;
    DenseMatrix eval_at_zero() const { return coeff(0); }
    DenseMatrix eval_at(std::uint64_t x0) const;

    /// Column j becomes x^{d_j} * (column j)(1/x); requires cdeg_j <= d_j.
    PolyMatrix col_reverse(const DegreeTuple& d) const;

    /// Coefficient matrices of x^{cdeg_j} per column j; no zero columns allowed.
    DenseMatrix leading_matrix() const;
    bool is_column_reduced() const;

    /// [Coeffs(col_1, d_1) | ... | Coeffs(col_m, d_m)], a rows x sum(d) matrix
    /// where Coeffs(v, d) lists coefficient vectors v_0 .. v_{d-1}.
    DenseMatrix expand_columns(const DegreeTuple& d) const;

    PolyMatrix operator+(const PolyMatrix& b) const;
    PolyMatrix operator-(const PolyMatrix& b) const;

    PolyMatrix transposed() const;
    PolyMatrix select_cols(std::span<const std::size_t> idx) const;
    PolyMatrix col_range(std::size_t c0, std::size_t c1) const;
    PolyMatrix row_range(std::size_t r0, std::size_t r1) const;
    PolyMatrix hstack(const PolyMatrix& b) const;
    PolyMatrix vstack(const PolyMatrix& b) const;

private:
    std::size_t rows_, cols_;
    std::vector<Poly> e_;
    PrimeModulus mod_;
};

PolyMatrix pm_add(const PolyMatrix& a, const PolyMatrix& b);
/// Exact product; picks naive convolution or an NTT path by size and field.
PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b);
/// (a * b) with every entry truncated mod x^order; cheaper than full pm_mul.
PolyMatrix pm_mul_truncated(const PolyMatrix& a, const PolyMatrix& b, std::int64_t order);

struct PartialLinearization {
    PolyMatrix expanded;  // square, size m_bar, degree <= t
    std::int64_t t;       // chunk width used by the construction
    std::size_t m_bar;
};

/// Structural expansion of a square P into a larger matrix of uniform small
/// degree with det(expanded) = det(P) and P^{-1} equal to the principal
/// block of expanded^{-1}. Purely a reindexing; performs no field operations.
PartialLinearization partial_linearization(const PolyMatrix& P);

}  // namespace krylovium
