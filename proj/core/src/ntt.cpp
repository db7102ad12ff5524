#include "krylovium/ntt.hpp"

#include <stdexcept>

namespace krylovium::detail {

int two_adicity(std::uint64_t p) {
    if (p == 2) return 0;
    std::uint64_t d = p - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    return s;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t r = 1;
    while (r < n) r <<= 1;
    return r;
}

bool ntt_available(std::uint64_t p, std::size_t len) {
    if ((p & 1) == 0) return false;
    std::size_t l = next_pow2(len);
    int k = 0;
    while ((std::size_t{1} << k) < l) ++k;
    return two_adicity(p) >= k && l < p;
}

namespace {

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) acc = static_cast<std::uint64_t>(static_cast<unsigned __int128>(acc) * base % p);
        base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % p);
        e >>= 1;
    }
    return acc;
}

// Finds a primitive 2^k-th root of unity mod p without factoring p-1:
// x^((p-1)/2^k) has order dividing 2^k, and has order exactly 2^k iff
// its 2^{k-1} power is -1. Half of all x succeed; scan small x.
std::uint64_t primitive_pow2_root(std::uint64_t p, int k) {
    std::uint64_t exp = (p - 1) >> k;
    for (std::uint64_t x = 2; x < p; ++x) {
        std::uint64_t y = powmod(x, exp, p);
        if (k == 0) return 1;
        if (powmod(y, std::uint64_t{1} << (k - 1), p) == p - 1) return y;
    }
    throw std::logic_error("no primitive root found");
}

}  // namespace

NttPlan::NttPlan(const MontgomeryDomain& md, std::size_t len) : md_(md), len_(len) {
    if (len < 2 || (len & (len - 1)) != 0) throw std::invalid_argument("NTT length must be a power of two >= 2");
    std::uint64_t p = md.modulus();
    if (!ntt_available(p, len)) throw std::invalid_argument("modulus does not support this NTT length");
    int k = 0;
    while ((std::size_t{1} << k) < len) ++k;
    std::uint64_t w = primitive_pow2_root(p, k);
    std::uint64_t w_inv = powmod(w, p - 2, p);
    // Stage s uses a root of order 2^{s+1}.
    fwd_roots_.resize(k);
    inv_roots_.resize(k);
    std::uint64_t f = w, g = w_inv;
    for (int s = k - 1; s >= 0; --s) {
        fwd_roots_[s] = md_.to(f);
        inv_roots_[s] = md_.to(g);
        f = static_cast<std::uint64_t>(static_cast<unsigned __int128>(f) * f % p);
        g = static_cast<std::uint64_t>(static_cast<unsigned __int128>(g) * g % p);
    }
    inv_len_ = md_.to(powmod(len % p, p - 2, p));
}

void NttPlan::transform(std::uint64_t* a, const std::vector<std::uint64_t>& roots) const {
    // Iterative Cooley-Tukey with bit-reversal permutation first.
    std::size_t n = len_;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    int stage = 0;
    for (std::size_t half = 1; half < n; half <<= 1, ++stage) {
        std::uint64_t wn = roots[stage];
        for (std::size_t start = 0; start < n; start += half << 1) {
            std::uint64_t w = md_.one();
            for (std::size_t i = 0; i < half; ++i) {
                std::uint64_t u = a[start + i];
                std::uint64_t v = md_.mul(a[start + i + half], w);
                a[start + i] = md_.add(u, v);
                a[start + i + half] = md_.sub(u, v);
                w = md_.mul(w, wn);
            }
        }
    }
}

void NttPlan::forward(std::uint64_t* a) const { transform(a, fwd_roots_); }

void NttPlan::inverse(std::uint64_t* a) const {
    transform(a, inv_roots_);
    for (std::size_t i = 0; i < len_; ++i) a[i] = md_.mul(a[i], inv_len_);
}

}  // namespace krylovium::detail
