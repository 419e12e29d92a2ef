#pragma once

#include <algorithm>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "metaforge/core/evaluation.hpp"

namespace metaforge::bench {

/// Master-worker population evaluation.
///
/// Invalid members are partitioned into contiguous blocks by index across
/// the workers; workers call the raw (pure) objective only, and the master
/// commits results in index order. Fitnesses, counter totals, best-so-far
/// updates and observer calls are therefore bitwise identical to the
/// single-worker path regardless of the worker count. A worker failure
/// aborts the generation, reporting the lowest failing member index; a hard
/// evaluation budget caps the number of members evaluated, in index order.
template <class S>
class ParallelEvaluator : public PopulationEvaluator<S> {
public:
    using G = genotype_t<S>;
    using F = fitness_t<S>;

    ParallelEvaluator(EvalCounter<G, F>& eval, std::size_t workers)
        : eval_(&eval), workers_(std::max<std::size_t>(1, workers)) {}

    std::size_t operator()(Population<S>& pop) override {
        std::vector<std::size_t> todo;
        for (std::size_t i = 0; i < pop.size(); ++i)
            if (!pop[i].valid())
                todo.push_back(i);
        const std::size_t allowed = static_cast<std::size_t>(
            std::min<std::uint64_t>(todo.size(), eval_->remaining()));

        if (workers_ == 1 || allowed <= 1) {
            for (std::size_t k = 0; k < allowed; ++k) {
                const std::size_t i = todo[k];
                try {
                    pop[i].set_fitness((*eval_)(pop[i].genotype()));
                } catch (const EvalBudgetExceeded&) {
                    throw;
                } catch (const std::exception& e) {
                    throw EvaluationError(i, e.what());
                }
            }
        } else {
            std::vector<F> results(allowed);
            std::vector<std::optional<std::string>> failures(allowed);
            const std::size_t nworkers = std::min(workers_, allowed);
            const std::size_t block = (allowed + nworkers - 1) / nworkers;
            std::vector<std::thread> threads;
            threads.reserve(nworkers);
            for (std::size_t w = 0; w < nworkers; ++w) {
                const std::size_t begin = w * block;
                const std::size_t end = std::min(begin + block, allowed);
                threads.emplace_back([&, begin, end]() {
                    for (std::size_t k = begin; k < end; ++k) {
                        try {
                            results[k] = eval_->raw()(pop[todo[k]].genotype());
                        } catch (const std::exception& e) {
                            failures[k] = e.what();
                        } catch (...) {
                            failures[k] = "unknown worker error";
                        }
                    }
                });
            }
            for (auto& t : threads)
                t.join();
            for (std::size_t k = 0; k < allowed; ++k) {
                if (failures[k])
                    throw EvaluationError(todo[k], *failures[k]);
                pop[todo[k]].set_fitness(results[k]);
                eval_->record(results[k]);
            }
        }

        if (allowed < todo.size())
            throw EvalBudgetExceeded(eval_->budget().value_or(0));
        return allowed;
    }

    std::size_t workers() const { return workers_; }

private:
    EvalCounter<G, F>* eval_;
    std::size_t workers_;
};

} // namespace metaforge::bench
