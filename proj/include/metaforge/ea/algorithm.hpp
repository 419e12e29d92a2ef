#pragma once

#include "metaforge/core/checkpoint.hpp"
#include "metaforge/core/continuators.hpp"
#include "metaforge/core/evaluation.hpp"
#include "metaforge/core/ops.hpp"
#include "metaforge/ea/selection.hpp"

namespace metaforge::ea {

/// Classic generational variation: crossover on consecutive pairs with rate
/// pc, then mutation on each member with rate pm.
template <class S>
class SgaVariation : public Variation<S> {
public:
    SgaVariation(Crossover<S>* crossover, double pc, Mutation<S>* mutation, double pm)
        : crossover_(crossover), pc_(pc), mutation_(mutation), pm_(pm) {}

    bool operator()(Population<S>& pool, RngStream& rng) override {
        bool any = false;
        if (crossover_) {
            for (std::size_t i = 0; i + 1 < pool.size(); i += 2)
                if (rng.coin(pc_))
                    any |= (*crossover_)(pool[i], pool[i + 1], rng);
        }
        if (mutation_) {
            for (auto& s : pool)
                if (rng.coin(pm_))
                    any |= (*mutation_)(s, rng);
        }
        return any;
    }

private:
    Crossover<S>* crossover_;
    double pc_;
    Mutation<S>* mutation_;
    double pm_;
};

/// Standard breeding stage: select lambda parents, then run the variation
/// pipeline over the copies.
template <class S>
class SelectVaryBreeder : public Breeder<S> {
public:
    SelectVaryBreeder(SelectOne<S>& select, Variation<S>& vary, std::size_t lambda)
        : select_(&select), vary_(&vary), lambda_(lambda) {}

    Population<S> operator()(const Population<S>& pop, RngStream& rng) override {
        Population<S> offspring = select_many(*select_, pop, lambda_, rng);
        (*vary_)(offspring, rng);
        return offspring;
    }

private:
    SelectOne<S>* select_;
    Variation<S>* vary_;
    std::size_t lambda_;
};

/// Generic evolutionary loop over an already initialized population:
/// breed, evaluate, replace, checkpoint, until the continuator stops.
/// The continuation check runs once per iteration, after replacement
/// (equivalently: before the next generation starts).
template <class S>
void run_ea_loop(Population<S>& pop, PopulationEvaluator<S>& evaluate, Breeder<S>& breed,
                 Replacement<S>& replace, Continuator<S>& cont, RngStream& rng,
                 Checkpoint<S>* checkpoint = nullptr,
                 const EvalProgress<fitness_t<S>>* progress = nullptr) {
    evaluate(pop);
    while (cont(pop)) {
        Population<S> offspring = breed(pop, rng);
        evaluate(offspring);
        pop = replace(pop, offspring);
        if (checkpoint && progress)
            (*checkpoint)(pop, *progress);
    }
}

/// Full run: initialize pop_size solutions, evaluate, then iterate.
/// Returns the final population; the trajectory is deterministic given the
/// seed of `rng`.
template <class S>
Population<S> run_ea(Init<S>& init, PopulationEvaluator<S>& evaluate, Breeder<S>& breed,
                     Replacement<S>& replace, Continuator<S>& cont, std::size_t pop_size,
                     RngStream& rng, Checkpoint<S>* checkpoint = nullptr,
                     const EvalProgress<fitness_t<S>>* progress = nullptr) {
    Population<S> pop;
    pop.reserve(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i)
        pop.push_back(init(rng));
    run_ea_loop(pop, evaluate, breed, replace, cont, rng, checkpoint, progress);
    return pop;
}

} // namespace metaforge::ea
