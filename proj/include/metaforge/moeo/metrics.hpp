#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "metaforge/moeo/objective_vector.hpp"

namespace metaforge::moeo {

/// Exact 2-D hypervolume: area of the union of the boxes [p_i, ref] in
/// direction-normalized (min-min) space, by sorting on the first objective
/// and sweeping. Every point must strictly dominate the reference point.
inline double hypervolume_2d(const std::vector<ObjectiveVector>& front,
                             const ObjectiveVector& ref) {
    if (ref.size() != 2)
        throw std::invalid_argument("hypervolume_2d: requires exactly two objectives");
    if (front.empty())
        return 0.0;
    const double rx = ref.as_min(0);
    const double ry = ref.as_min(1);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(front.size());
    for (const auto& p : front) {
        if (!p.compatible_with(ref))
            throw std::invalid_argument("hypervolume_2d: incompatible objective vectors");
        const double x = p.as_min(0);
        const double y = p.as_min(1);
        if (!(x < rx && y < ry))
            throw std::domain_error("hypervolume_2d: point does not dominate the reference");
        pts.emplace_back(x, y);
    }
    std::sort(pts.begin(), pts.end());
    // Keep the staircase: strictly decreasing y as x increases.
    std::vector<std::pair<double, double>> stair;
    for (const auto& p : pts)
        if (stair.empty() || p.second < stair.back().second)
            stair.push_back(p);
    double area = 0.0;
    for (std::size_t i = 0; i < stair.size(); ++i) {
        const double next_x = i + 1 < stair.size() ? stair[i + 1].first : rx;
        area += (next_x - stair[i].first) * (ry - stair[i].second);
    }
    return area;
}

} // namespace metaforge::moeo
