#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "metaforge/moeo/objective_vector.hpp"

namespace metaforge::moeo {

namespace detail {
inline void check_weights(const std::vector<double>& w, std::size_t dims) {
    if (w.size() != dims)
        throw std::invalid_argument("scalarize: weight/dimension mismatch");
    double total = 0.0;
    for (double wi : w) {
        if (wi < 0.0)
            throw std::invalid_argument("scalarize: weights must be non-negative");
        total += wi;
    }
    if (total == 0.0)
        throw std::invalid_argument("scalarize: weights must not all be zero");
}
} // namespace detail

/// Weighted sum of the direction-normalized (minimized) objective values.
inline double weighted_sum(const std::vector<double>& w, const ObjectiveVector& v) {
    detail::check_weights(w, v.size());
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += w[i] * v.as_min(i);
    return s;
}

/// Weighted Chebyshev distance to a reference point, in minimized space.
inline double chebyshev(const std::vector<double>& w, const ObjectiveVector& ref,
                        const ObjectiveVector& v) {
    detail::check_weights(w, v.size());
    if (!ref.compatible_with(v))
        throw std::invalid_argument("chebyshev: incompatible reference point");
    double m = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        m = std::max(m, w[i] * std::abs(v.as_min(i) - ref.as_min(i)));
    return m;
}

} // namespace metaforge::moeo
