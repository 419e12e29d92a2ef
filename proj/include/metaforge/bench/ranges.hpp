#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace metaforge::bench {

/// Uniform bucketing of [min, max] into a fixed number of buckets.
/// Out-of-range values clamp to the edge buckets rather than erroring,
/// since best-so-far can exceed the target range on easy instances.
struct LinearRange {
    double min;
    double max;
    std::size_t buckets;

    LinearRange(double min_, double max_, std::size_t buckets_)
        : min(min_), max(max_), buckets(buckets_) {
        if (!(min < max))
            throw std::invalid_argument("LinearRange: min must be < max");
        if (buckets == 0)
            throw std::invalid_argument("LinearRange: buckets must be >= 1");
    }

    std::size_t bucket(double v) const {
        const double raw =
            std::floor((v - min) / (max - min) * static_cast<double>(buckets));
        if (raw < 0.0)
            return 0;
        if (raw >= static_cast<double>(buckets))
            return buckets - 1;
        return static_cast<std::size_t>(raw);
    }
};

} // namespace metaforge::bench
