#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace metaforge {

/// Deterministic random stream with platform-stable draws.
///
/// All transformations of the raw mt19937_64 output are implemented here
/// rather than through std:: distributions, whose output is
/// implementation-defined. A given seed therefore yields the same sequence
/// on every platform. Streams derived from (master seed, stream index) are
/// decorrelated through a splitmix64 finalizer and are pairwise distinct.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : RngStream(derive_seed(master_seed, stream_index)) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n). Lemire multiply-shift with rejection,
    /// so the distribution is exactly uniform.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0)
            throw std::invalid_argument("RngStream::below: empty range");
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (std::uint64_t{0} - n) % n;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    /// Bernoulli draw; p <= 0 and p >= 1 short-circuit without consuming output.
    bool coin(double p) {
        if (p <= 0.0)
            return false;
        if (p >= 1.0)
            return true;
        return uniform01() < p;
    }

    /// Standard normal via Box-Muller; consumes exactly two draws.
    double normal() {
        const double u1 = 1.0 - uniform01(); // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// splitmix64 finalizer (public-domain mixing function).
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
        return mix(mix(master) + (index + 1) * 0x9E3779B97F4A7C15ull);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

/// Partial Fisher-Yates: after the call, v[0..k) is a uniform k-subset of v
/// in uniform random order. The tail is left in unspecified order.
template <class T>
void partial_shuffle(std::vector<T>& v, std::size_t k, RngStream& rng) {
    if (k > v.size())
        throw std::invalid_argument("partial_shuffle: k exceeds size");
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.index(v.size() - i);
        std::swap(v[i], v[j]);
    }
}

} // namespace metaforge
