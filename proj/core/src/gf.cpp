#include "krylovium/gf.hpp"

#include <stdexcept>

namespace krylovium {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        e >>= 1;
    }
    return acc;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 3.3e24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t field_op_count() { return detail::field_op_counter; }
void reset_field_op_count() { detail::field_op_counter = 0; }

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
    if (p >= max_modulus) throw std::invalid_argument("modulus must be below 2^62");
    if (!is_prime_u64(p)) throw std::invalid_argument("modulus must be prime");
}

std::uint64_t PrimeModulus::inv(std::uint64_t a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero field element");
    ++detail::field_op_counter;
    // Extended Euclid on (a, p); p prime so gcd is 1.
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p_)) : static_cast<std::uint64_t>(t);
}

std::uint64_t PrimeModulus::pow(std::uint64_t base, std::uint64_t e) const {
    std::uint64_t acc = 1 % p_;
    base %= p_;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

namespace detail {

MontgomeryDomain::MontgomeryDomain(std::uint64_t p) : p_(p) {
    if ((p & 1) == 0) throw std::invalid_argument("Montgomery domain needs an odd modulus");
    // Newton iteration for p^{-1} mod 2^64.
    std::uint64_t inv = p;
    for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
    pinv_neg_ = ~inv + 1;
    r1_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) % p);
    r2_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r1_) * r1_ % p);
}

}  // namespace detail

}  // namespace krylovium
