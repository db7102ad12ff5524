#include "krylovium/rng.hpp"

namespace krylovium {

std::uint64_t CounterRng::splitmix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t CounterRng::next_u64() {
    ++counter_;
    return splitmix64(seed_ + counter_ * 0x9E3779B97F4A7C15ull);
}

std::uint64_t CounterRng::next_mod(const PrimeModulus& mod) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * mod.value()) >> 64);
}

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, const PrimeModulus& mod, CounterRng& rng) {
    DenseMatrix m(rows, cols, mod);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.next_mod(mod));
    return m;
}

DenseMatrix random_nonsingular_matrix(std::size_t n, const PrimeModulus& mod, CounterRng& rng) {
    for (;;) {
        DenseMatrix m = random_matrix(n, n, mod, rng);
        if (m.rank() == n) return m;
    }
}

}  // namespace krylovium
