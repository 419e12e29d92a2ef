#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <vector>

#include "metaforge/core/ops.hpp"
#include "metaforge/moeo/sorting.hpp"

namespace metaforge::moeo {

namespace detail {

/// Per-member (rank, crowding) tables over a population.
template <class S>
struct RankedView {
    FrontPartition partition;
    std::vector<double> crowding;

    explicit RankedView(const Population<S>& pop) : partition(nondominated_sort(pop)) {
        crowding.assign(pop.size(), 0.0);
        for (const auto& front : partition.fronts) {
            const std::vector<double> c = crowding_of(pop, front);
            for (std::size_t k = 0; k < front.size(); ++k)
                crowding[front[k]] = c[k];
        }
    }

    /// Lexicographic "i is preferable to j": lower rank, then larger
    /// crowding, then lower index.
    bool preferred(std::size_t i, std::size_t j) const {
        if (partition.rank[i] != partition.rank[j])
            return partition.rank[i] < partition.rank[j];
        if (crowding[i] != crowding[j])
            return crowding[i] > crowding[j];
        return i < j;
    }
};

} // namespace detail

/// NSGA-II survivor selection over a combined population: fill fronts in
/// rank order, truncating the last one by descending crowding distance
/// (ties toward the lower index). Returns exactly mu members.
template <class S>
Population<S> nsga2_survivors(const Population<S>& combined, std::size_t mu) {
    if (combined.size() < mu)
        throw std::invalid_argument("nsga2_survivors: fewer candidates than mu");
    const FrontPartition partition = nondominated_sort(combined);
    Population<S> next;
    next.reserve(mu);
    for (const auto& front : partition.fronts) {
        if (next.size() + front.size() <= mu) {
            for (std::size_t i : front)
                next.push_back(combined[i]);
            if (next.size() == mu)
                break;
            continue;
        }
        const std::vector<double> crowd = crowding_of(combined, front);
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (crowd[a] != crowd[b])
                return crowd[a] > crowd[b];
            return front[a] < front[b];
        });
        for (std::size_t k = 0; next.size() < mu; ++k)
            next.push_back(combined[front[order[k]]]);
        break;
    }
    return next;
}

/// One NSGA-II generation: binary tournament on (rank, crowding) picks mu
/// parents, the variation pipeline produces offspring, and survivors are
/// drawn from parents and offspring together.
template <class S>
Population<S> nsga2_generation(const Population<S>& pop, Variation<S>& vary,
                               PopulationEvaluator<S>& evaluate, std::size_t mu,
                               RngStream& rng) {
    const detail::RankedView<S> view(pop);
    Population<S> offspring;
    offspring.reserve(mu);
    for (std::size_t j = 0; j < mu; ++j) {
        const std::size_t a = rng.index(pop.size());
        const std::size_t b = rng.index(pop.size());
        offspring.push_back(pop[view.preferred(a, b) ? a : b]);
    }
    vary(offspring, rng);
    evaluate(offspring);

    Population<S> combined = pop;
    combined.insert(combined.end(), offspring.begin(), offspring.end());
    return nsga2_survivors(combined, mu);
}

/// Dump a population as CSV: objective columns, rank and crowding per row.
template <class S>
void write_front_csv(const Population<S>& pop, std::ostream& out) {
    if (pop.empty())
        return;
    const std::size_t dims = pop[0].fitness().size();
    for (std::size_t d = 0; d < dims; ++d)
        out << "obj" << d << ",";
    out << "rank,crowding\n";
    const detail::RankedView<S> view(pop);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        for (std::size_t d = 0; d < dims; ++d)
            out << pop[i].fitness().value(d) << ",";
        out << view.partition.rank[i] << "," << view.crowding[i] << "\n";
    }
}

} // namespace metaforge::moeo
