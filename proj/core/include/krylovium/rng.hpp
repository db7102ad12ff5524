#pragma once

#include <cstdint>

#include "krylovium/dense_matrix.hpp"

namespace krylovium {

/// Counter-based generator: draw i of stream `seed` is
///   splitmix64(seed + (i+1) * 0x9E3779B97F4A7C15),
/// and residues are taken by the multiply-high reduction
///   value = (draw * p) >> 64.
/// Any implementation of these two formulas reproduces the exact streams.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64();
    /// Uniform residue in [0, p).
    std::uint64_t next_mod(const PrimeModulus& mod);

    static std::uint64_t splitmix64(std::uint64_t x);

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, const PrimeModulus& mod, CounterRng& rng);

/// Random matrix certified nonsingular (rejection sampling).
DenseMatrix random_nonsingular_matrix(std::size_t n, const PrimeModulus& mod, CounterRng& rng);

}  // namespace krylovium
