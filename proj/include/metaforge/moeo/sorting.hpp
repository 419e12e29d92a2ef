#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "metaforge/moeo/objective_vector.hpp"

namespace metaforge::moeo {

struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts; // member indices per rank
    std::vector<std::size_t> rank;                // rank per member
};

/// Fast non-dominated sorting: front 0 is the non-dominated set, front k the
/// non-dominated set once fronts < k are removed. Every member gets exactly
/// one rank.
template <class S>
FrontPartition nondominated_sort(const Population<S>& pop) {
    const std::size_t n = pop.size();
    FrontPartition out;
    out.rank.assign(n, 0);
    if (n == 0)
        return out;

    std::vector<std::size_t> dominated_by(n, 0);       // how many dominate i
    std::vector<std::vector<std::size_t>> dominates_set(n);
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (dominates(pop[i].fitness(), pop[j].fitness()))
                dominates_set[i].push_back(j);
            else if (dominates(pop[j].fitness(), pop[i].fitness()))
                ++dominated_by[i];
        }
        if (dominated_by[i] == 0) {
            out.rank[i] = 0;
            current.push_back(i);
        }
    }
    while (!current.empty()) {
        out.fronts.push_back(current);
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            for (std::size_t j : dominates_set[i]) {
                if (--dominated_by[j] == 0) {
                    out.rank[j] = out.fronts.size();
                    next.push_back(j);
                }
            }
        }
        current = std::move(next);
    }
    return out;
}

inline constexpr double crowding_infinity = std::numeric_limits<double>::infinity();

/// Crowding distance of a single front. Per objective the members are
/// sorted (ties by index); boundary members get infinity, interior members
/// accumulate (next - prev) / (max - min). Zero-range objectives contribute
/// nothing. Fronts of at most two members are all-infinite.
inline std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front) {
    const std::size_t n = front.size();
    std::vector<double> crowd(n, 0.0);
    if (n == 0)
        return crowd;
    if (n <= 2) {
        std::fill(crowd.begin(), crowd.end(), crowding_infinity);
        return crowd;
    }
    const std::size_t dims = front[0].size();
    std::vector<std::size_t> order(n);
    for (std::size_t d = 0; d < dims; ++d) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const double va = front[a].as_min(d);
            const double vb = front[b].as_min(d);
            if (va != vb)
                return va < vb;
            return a < b;
        });
        const double lo = front[order.front()].as_min(d);
        const double hi = front[order.back()].as_min(d);
        crowd[order.front()] = crowding_infinity;
        crowd[order.back()] = crowding_infinity;
        if (hi == lo)
            continue;
        for (std::size_t k = 1; k + 1 < n; ++k) {
            const std::size_t i = order[k];
            if (crowd[i] == crowding_infinity)
                continue;
            crowd[i] += (front[order[k + 1]].as_min(d) - front[order[k - 1]].as_min(d)) / (hi - lo);
        }
    }
    return crowd;
}

/// Crowding over a population subset given by member indices.
template <class S>
std::vector<double> crowding_of(const Population<S>& pop, const std::vector<std::size_t>& front) {
    std::vector<ObjectiveVector> vecs;
    vecs.reserve(front.size());
    for (std::size_t i : front)
        vecs.push_back(pop[i].fitness());
    return crowding_distance(vecs);
}

} // namespace metaforge::moeo
