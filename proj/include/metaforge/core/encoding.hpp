#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "metaforge/core/rng.hpp"

namespace metaforge {

/// Bit-vector genotype, one byte per bit (values 0/1).
using BitVec = std::vector<std::uint8_t>;

/// Real-vector genotype.
using RealVec = std::vector<double>;

inline BitVec random_bitvec(std::size_t n, RngStream& rng) {
    BitVec x(n);
    for (auto& b : x)
        b = static_cast<std::uint8_t>(rng.below(2));
    return x;
}

inline std::size_t ones_count(const BitVec& x) {
    return static_cast<std::size_t>(std::accumulate(x.begin(), x.end(), std::size_t{0}));
}

inline std::size_t hamming_distance(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += (a[i] != b[i]);
    return d;
}

} // namespace metaforge
