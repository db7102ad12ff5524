#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "krylovium/bignat.hpp"
#include "krylovium/gf.hpp"

namespace krylovium {

/// Degree of the zero polynomial. Kept distinct from -1 so that degree
/// arithmetic cannot silently produce "degree -1" artifacts.
constexpr std::int64_t kNegInfDegree = std::numeric_limits<std::int64_t>::min();

inline bool is_neg_inf(std::int64_t d) { return d == kNegInfDegree; }

/// Schoolbook/Karatsuba crossover for polynomial multiplication.
std::size_t& poly_karatsuba_threshold();

/// NTT-based multiplication for NTT-friendly moduli (on by default). The
/// product is identical whichever path runs.
bool& poly_ntt_enabled();

/// Univariate polynomial over GF(p), coefficients stored low-to-high and
/// normalized: either empty (zero) or with a nonzero leading coefficient.
class Poly {
public:
    explicit Poly(PrimeModulus mod) : mod_(mod) {}
    Poly(std::vector<std::uint64_t> coeffs, PrimeModulus mod);

    static Poly zero(PrimeModulus mod) { return Poly(mod); }
    static Poly constant(std::uint64_t c, PrimeModulus mod) { return Poly({c}, mod); }
    static Poly one(PrimeModulus mod) { return constant(1, mod); }
    /// c * x^k
    static Poly monomial(std::uint64_t c, std::size_t k, PrimeModulus mod);

    const PrimeModulus& modulus() const { return mod_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    std::int64_t degree() const { return c_.empty() ? kNegInfDegree : static_cast<std::int64_t>(c_.size()) - 1; }

    std::uint64_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    std::uint64_t leading_coeff() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator+(const Poly& g) const;
    Poly operator-(const Poly& g) const;
    Poly operator*(const Poly& g) const;
    Poly& operator+=(const Poly& g) { return *this = *this + g; }

    Poly scaled(std::uint64_t c) const;
    /// *this += c * g, in place.
    void add_scaled(const Poly& g, std::uint64_t c);
    /// *this += c * x^k * g, in place.
    void add_scaled_shifted(const Poly& g, std::uint64_t c, std::size_t k);

    /// Quotient and remainder; g must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& g) const;

    /// Monic gcd; zero if both inputs are zero.
    static Poly gcd(Poly f, Poly g);

    /// Drops all terms of degree >= d (d >= 0).
    Poly truncated(std::int64_t d) const;
    /// x^d * f(1/x); requires deg f <= d.
    Poly reversed(std::int64_t d) const;
    /// f * x^k.
    Poly shifted_up(std::size_t k) const;
    /// f div x^k.
    Poly shifted_down(std::size_t k) const;

    std::uint64_t eval(std::uint64_t x0) const;

    Poly make_monic() const;

    /// x^k rem f for a (possibly huge) natural k; f monic of degree >= 1.
    static Poly powmod_x(const BigNat& k, const Poly& f);

    bool operator==(const Poly& g) const { return mod_ == g.mod_ && c_ == g.c_; }

private:
    void normalize();
    static void check_same(const Poly& a, const Poly& b);

    std::vector<std::uint64_t> c_;
    PrimeModulus mod_;
};

}  // namespace krylovium
