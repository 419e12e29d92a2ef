#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "metaforge/core/ops.hpp"

namespace metaforge {

/// Calls every registered monitor exactly once per invocation, in
/// registration order. Intended to run once per algorithm iteration.
template <class S>
class Checkpoint {
public:
    void add(Monitor<S>& m) { monitors_.push_back(&m); }

    std::size_t size() const { return monitors_.size(); }

    void operator()(const Population<S>& pop, const EvalProgress<fitness_t<S>>& progress) {
        for (auto* m : monitors_)
            (*m)(pop, progress);
    }

private:
    std::vector<Monitor<S>*> monitors_;
};

/// Records the best population fitness at each checkpoint.
template <class S>
class BestFitnessMonitor : public Monitor<S> {
public:
    using F = fitness_t<S>;

    explicit BestFitnessMonitor(Better<F> better) : better_(better) {}

    void operator()(const Population<S>& pop, const EvalProgress<F>&) override {
        records_.push_back(pop[best_index(pop, better_)].fitness());
    }

    const std::vector<F>& records() const { return records_; }

private:
    Better<F> better_;
    std::vector<F> records_;
};

/// Per-iteration statistics row: evaluation count, best and mean fitness.
template <class S>
class PopulationStatsMonitor : public Monitor<S> {
public:
    using F = fitness_t<S>;

    struct Row {
        std::uint64_t evaluations;
        F best;
        double mean;
    };

    explicit PopulationStatsMonitor(Better<F> better) : better_(better) {}

    void operator()(const Population<S>& pop, const EvalProgress<F>& progress) override {
        rows_.push_back(Row{progress.count(), pop[best_index(pop, better_)].fitness(),
                            mean_fitness(pop)});
    }

    const std::vector<Row>& rows() const { return rows_; }

private:
    Better<F> better_;
    std::vector<Row> rows_;
};

/// Updater hook: applies a user callback once per iteration, e.g. to adjust
/// a parameter value held elsewhere.
template <class S>
class UpdaterMonitor : public Monitor<S> {
public:
    using Callback = std::function<void(const Population<S>&, const EvalProgress<fitness_t<S>>&)>;

    explicit UpdaterMonitor(Callback cb) : cb_(std::move(cb)) {}

    void operator()(const Population<S>& pop,
                    const EvalProgress<fitness_t<S>>& progress) override {
        cb_(pop, progress);
    }

private:
    Callback cb_;
};

} // namespace metaforge
