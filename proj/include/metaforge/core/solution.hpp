#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "metaforge/core/encoding.hpp"

namespace metaforge {

/// A candidate solution: genotype plus an optional cached fitness.
///
/// The fitness is valid iff it corresponds to the current genotype. Any
/// operator that mutates the genotype and reports a change must call
/// invalidate(); the framework's variation operators all do.
template <class G, class F = double>
class Solution {
public:
    using Genotype = G;
    using Fitness = F;

    Solution() = default;
    explicit Solution(G genotype) : genotype_(std::move(genotype)) {}

    const G& genotype() const { return genotype_; }
    G& genotype() { return genotype_; }

    bool valid() const { return fitness_.has_value(); }

    const F& fitness() const {
        if (!fitness_)
            throw std::logic_error("Solution::fitness: solution is invalid (not evaluated)");
        return *fitness_;
    }

    void set_fitness(F f) { fitness_ = std::move(f); }
    void invalidate() { fitness_.reset(); }

private:
    G genotype_{};
    std::optional<F> fitness_{};
};

using BitSolution = Solution<BitVec, double>;
using RealSolution = Solution<RealVec, double>;

/// Ordered collection of solutions; the unit of selection and replacement.
/// Order is stable under evaluation and duplicates are allowed.
template <class S>
using Population = std::vector<S>;

template <class S>
using fitness_t = typename S::Fitness;

template <class S>
using genotype_t = typename S::Genotype;

/// Index of the best member (ties resolved toward the lower index).
/// All members must be valid.
template <class S>
std::size_t best_index(const Population<S>& pop, const Better<fitness_t<S>>& better) {
    if (pop.empty())
        throw std::invalid_argument("best_index: empty population");
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i)
        if (better(pop[i].fitness(), pop[best].fitness()))
            best = i;
    return best;
}

template <class S>
std::size_t worst_index(const Population<S>& pop, const Better<fitness_t<S>>& better) {
    if (pop.empty())
        throw std::invalid_argument("worst_index: empty population");
    std::size_t worst = 0;
    for (std::size_t i = 1; i < pop.size(); ++i)
        if (better(pop[worst].fitness(), pop[i].fitness()))
            worst = i;
    return worst;
}

template <class S>
double mean_fitness(const Population<S>& pop) {
    if (pop.empty())
        throw std::invalid_argument("mean_fitness: empty population");
    double sum = 0.0;
    for (const auto& s : pop)
        sum += s.fitness();
    return sum / static_cast<double>(pop.size());
}

} // namespace metaforge
