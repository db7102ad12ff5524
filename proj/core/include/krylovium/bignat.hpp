#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace krylovium {

/// Arbitrary-size natural number; just enough for use as an exponent
/// (decimal parsing, parity, halving, comparison).
class BigNat {
public:
    BigNat() = default;
    explicit BigNat(std::uint64_t v) {
        if (v) limbs_.push_back(v);
    }

    static BigNat from_decimal(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1); }

    /// In-place shift right by one bit.
    void shr1();

    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t to_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

    std::string to_decimal() const;

    bool operator==(const BigNat&) const = default;

private:
    std::vector<std::uint64_t> limbs_;  // little-endian, no trailing zero limb

    void mul_small_add(std::uint64_t mul, std::uint64_t add);
};

}  // namespace krylovium
