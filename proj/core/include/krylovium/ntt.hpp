#pragma once

#include <cstdint>
#include <vector>

#include "krylovium/gf.hpp"

namespace krylovium::detail {

/// Returns the largest k with 2^k dividing p-1 (0 for p = 2).
int two_adicity(std::uint64_t p);

/// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

/// Radix-2 number-theoretic transform over GF(p), p prime with
/// 2-adicity >= log2(len). Values are in the Montgomery domain of `md`.
/// Plans cache the twiddle tables for a fixed (p, len).
class NttPlan {
public:
    NttPlan(const MontgomeryDomain& md, std::size_t len);

    std::size_t length() const { return len_; }
    const MontgomeryDomain& domain() const { return md_; }

    /// In-place forward transform of `a` (size len, Montgomery form).
    void forward(std::uint64_t* a) const;
    /// In-place inverse transform including the 1/len scaling.
    void inverse(std::uint64_t* a) const;

private:
    void transform(std::uint64_t* a, const std::vector<std::uint64_t>& roots) const;

    MontgomeryDomain md_;
    std::size_t len_;
    std::vector<std::uint64_t> fwd_roots_;  // per-stage principal roots
    std::vector<std::uint64_t> inv_roots_;
    std::uint64_t inv_len_;  // Montgomery form of len^{-1}
};

/// True if length-`len` NTTs exist over GF(p).
bool ntt_available(std::uint64_t p, std::size_t len);

}  // namespace krylovium::detail
