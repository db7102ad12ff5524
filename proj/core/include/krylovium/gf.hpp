#pragma once

#include <cstdint>
#include <limits>

#include "krylovium/errors.hpp"

namespace krylovium {

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Number of field multiplications/inversions performed so far (this thread).
std::uint64_t field_op_count();
void reset_field_op_count();

namespace detail {
inline thread_local std::uint64_t field_op_counter = 0;
}

/// A prime field GF(p) for word-sized p, 2 <= p < 2^62. All scalar
/// arithmetic in the library goes through the helpers below; residues are
/// kept canonical in [0, p) at all times.
class PrimeModulus {
public:
    static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 62);

    explicit PrimeModulus(std::uint64_t p);

    std::uint64_t value() const { return p_; }

    bool operator==(const PrimeModulus&) const = default;

    std::uint64_t reduce(std::uint64_t x) const { return x % p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;  // no overflow: a, b < 2^62
        return s >= p_ ? s - p_ : s;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        ++detail::field_op_counter;
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }

    /// Multiplicative inverse of a nonzero residue (extended Euclid).
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t pow(std::uint64_t base, std::uint64_t e) const;

private:
    std::uint64_t p_;
};

/// A canonical residue tied to its modulus. Value semantics; operations on
/// mismatched moduli throw ModulusMismatchError.
class FieldElement {
public:
    FieldElement(std::uint64_t value, PrimeModulus mod) : v_(mod.reduce(value)), mod_(mod) {}

    std::uint64_t value() const { return v_; }
    const PrimeModulus& modulus() const { return mod_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return FieldElement(a.mod_.add(a.v_, b.v_), a.mod_, raw_tag{});
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return FieldElement(a.mod_.sub(a.v_, b.v_), a.mod_, raw_tag{});
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return FieldElement(a.mod_.mul(a.v_, b.v_), a.mod_, raw_tag{});
    }
    FieldElement operator-() const { return FieldElement(mod_.neg(v_), mod_, raw_tag{}); }

    FieldElement inverse() const { return FieldElement(mod_.inv(v_), mod_, raw_tag{}); }

    bool operator==(const FieldElement& a) const { return v_ == a.v_ && mod_ == a.mod_; }

private:
    struct raw_tag {};
    FieldElement(std::uint64_t v, PrimeModulus mod, raw_tag) : v_(v), mod_(mod) {}

    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (a.mod_ != b.mod_) throw ModulusMismatchError("field elements under different moduli");
    }

    std::uint64_t v_;
    PrimeModulus mod_;
};

inline FieldElement inv(const FieldElement& a) { return a.inverse(); }

namespace detail {

/// Montgomery arithmetic for odd p; used inside hot kernels (matrix products,
/// NTT butterflies). Residues are converted at kernel boundaries so observable
/// values stay canonical.
class MontgomeryDomain {
public:
    explicit MontgomeryDomain(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    std::uint64_t one() const { return r1_; }

    std::uint64_t to(std::uint64_t x) const { return mul(x, r2_); }
    std::uint64_t from(std::uint64_t x) const { return redc(static_cast<unsigned __int128>(x)); }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        ++field_op_counter;
        return redc(static_cast<unsigned __int128>(a) * b);
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }

private:
    std::uint64_t redc(unsigned __int128 t) const {
        std::uint64_t m = static_cast<std::uint64_t>(t) * pinv_neg_;
        unsigned __int128 u = t + static_cast<unsigned __int128>(m) * p_;
        std::uint64_t r = static_cast<std::uint64_t>(u >> 64);
        return r >= p_ ? r - p_ : r;
    }

    std::uint64_t p_;
    std::uint64_t pinv_neg_;  // -p^{-1} mod 2^64
    std::uint64_t r1_;        // 2^64 mod p
    std::uint64_t r2_;        // 2^128 mod p
};

}  // namespace detail

}  // namespace krylovium
