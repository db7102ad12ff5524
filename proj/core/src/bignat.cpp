#include "krylovium/bignat.hpp"

#include <algorithm>
#include <stdexcept>

namespace krylovium {

BigNat BigNat::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty decimal number");
    BigNat n;
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("invalid decimal digit");
        n.mul_small_add(10, static_cast<std::uint64_t>(ch - '0'));
    }
    return n;
}

void BigNat::mul_small_add(std::uint64_t mul, std::uint64_t add) {
    unsigned __int128 carry = add;
    for (auto& limb : limbs_) {
        unsigned __int128 v = static_cast<unsigned __int128>(limb) * mul + carry;
        limb = static_cast<std::uint64_t>(v);
        carry = v >> 64;
    }
    if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
}

void BigNat::shr1() {
    std::uint64_t carry = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t next_carry = limbs_[i] & 1;
        limbs_[i] = (limbs_[i] >> 1) | (carry << 63);
        carry = next_carry;
    }
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::string BigNat::to_decimal() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint64_t> work(limbs_.rbegin(), limbs_.rend());  // big-endian scratch
    std::string out;
    while (!work.empty()) {
        unsigned __int128 rem = 0;
        for (auto& limb : work) {
            unsigned __int128 v = (rem << 64) | limb;
            limb = static_cast<std::uint64_t>(v / 10);
            rem = v % 10;
        }
        out.push_back(static_cast<char>('0' + static_cast<int>(rem)));
        while (!work.empty() && work.front() == 0) work.erase(work.begin());
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace krylovium
