#pragma once

#include <cstdint>
#include <vector>

#include "metaforge/core/evaluation.hpp"
#include "metaforge/core/ops.hpp"

namespace metaforge {

/// Stop once the evaluation count reaches the budget (inclusive: stops when
/// count >= max, matching benchmark budget semantics).
template <class S>
class MaxEvalsContinue : public Continuator<S> {
public:
    MaxEvalsContinue(const EvalProgress<fitness_t<S>>& progress, std::uint64_t max_evals)
        : progress_(&progress), max_evals_(max_evals) {}

    bool operator()(const Population<S>&) override { return progress_->count() < max_evals_; }

private:
    const EvalProgress<fitness_t<S>>* progress_;
    std::uint64_t max_evals_;
};

/// Stop once the best-so-far fitness reaches the target (better or equal in
/// the improving direction).
template <class S>
class TargetFitnessContinue : public Continuator<S> {
public:
    using F = fitness_t<S>;

    TargetFitnessContinue(const EvalProgress<F>& progress, F target, Better<F> better)
        : progress_(&progress), target_(std::move(target)), better_(better) {}

    bool operator()(const Population<S>&) override {
        const auto& best = progress_->best();
        if (!best)
            return true;
        return better_(target_, *best); // continue while target is still strictly better
    }

private:
    const EvalProgress<F>* progress_;
    F target_;
    Better<F> better_;
};

/// Conjunction: continue only while every criterion continues.
template <class S>
class CombinedContinue : public Continuator<S> {
public:
    CombinedContinue() = default;

    void add(Continuator<S>& c) { parts_.push_back(&c); }

    bool operator()(const Population<S>& pop) override {
        for (auto* c : parts_)
            if (!(*c)(pop))
                return false;
        return true;
    }

private:
    std::vector<Continuator<S>*> parts_;
};

} // namespace metaforge
