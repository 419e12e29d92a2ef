#pragma once

#include <stdexcept>
#include <utility>

#include "metaforge/core/checkpoint.hpp"
#include "metaforge/core/evaluation.hpp"
#include "metaforge/core/ops.hpp"

namespace metaforge::ea {

/// Modular genetic algorithm template.
///
/// Each offspring is built as follows: with probability `crossover_rate`
/// two parents chosen by `parent_select` are copied and crossed, and the
/// first result seeds the offspring; otherwise a single solution chosen by
/// `mutation_select` is copied. Independently, with probability
/// `mutation_rate` the mutation operator is then applied. Offspring are
/// evaluated and the replacement runs once per generation.
template <class S>
class FastGa {
public:
    struct Slots {
        std::size_t offspring_size = 0;
        Crossover<S>* crossover = nullptr;
        double crossover_rate = 0.0;
        Mutation<S>* mutation = nullptr;
        double mutation_rate = 0.0;
        SelectOne<S>* parent_select = nullptr;
        SelectOne<S>* mutation_select = nullptr;
        Replacement<S>* replacement = nullptr;
        Continuator<S>* cont = nullptr;
    };

    FastGa(Slots slots, PopulationEvaluator<S>& evaluate) : slots_(slots), evaluate_(&evaluate) {
        if (slots_.offspring_size == 0 || !slots_.crossover || !slots_.mutation ||
            !slots_.parent_select || !slots_.mutation_select || !slots_.replacement ||
            !slots_.cont)
            throw std::invalid_argument("FastGa: all slots must be filled");
    }

    void set_checkpoint(Checkpoint<S>& cp, const EvalProgress<fitness_t<S>>& progress) {
        checkpoint_ = &cp;
        progress_ = &progress;
    }

    /// Runs on `pop` in place. The population must be non-empty; it is
    /// evaluated first, then generations run until the continuator stops.
    void operator()(Population<S>& pop, RngStream& rng) {
        if (pop.empty())
            throw std::invalid_argument("FastGa: empty population");
        (*evaluate_)(pop);
        while ((*slots_.cont)(pop)) {
            Population<S> offspring;
            offspring.reserve(slots_.offspring_size);
            for (std::size_t j = 0; j < slots_.offspring_size; ++j) {
                S child = make_child(pop, rng);
                if (rng.coin(slots_.mutation_rate))
                    (*slots_.mutation)(child, rng);
                offspring.push_back(std::move(child));
            }
            (*evaluate_)(offspring);
            pop = (*slots_.replacement)(pop, offspring);
            if (checkpoint_)
                (*checkpoint_)(pop, *progress_);
        }
    }

private:
    S make_child(const Population<S>& pop, RngStream& rng) {
        if (rng.coin(slots_.crossover_rate)) {
            S child = (*slots_.parent_select)(pop, rng);
            S mate = (*slots_.parent_select)(pop, rng);
            (*slots_.crossover)(child, mate, rng);
            return child;
        }
        return (*slots_.mutation_select)(pop, rng);
    }

    Slots slots_;
    PopulationEvaluator<S>* evaluate_;
    Checkpoint<S>* checkpoint_ = nullptr;
    const EvalProgress<fitness_t<S>>* progress_ = nullptr;
};

} // namespace metaforge::ea
