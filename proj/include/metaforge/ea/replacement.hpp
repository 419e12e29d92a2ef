#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "metaforge/core/fitness.hpp"
#include "metaforge/core/ops.hpp"

namespace metaforge::ea {

namespace detail {

/// Candidate order used by the truncation replacements: better fitness
/// first, ties prefer offspring, then the lower index.
template <class S>
struct MergedRef {
    const S* sol;
    bool is_offspring;
    std::size_t index;
};

template <class S, class F>
void sort_candidates(std::vector<MergedRef<S>>& v, const Better<F>& better) {
    std::sort(v.begin(), v.end(), [&](const MergedRef<S>& x, const MergedRef<S>& y) {
        if (better(x.sol->fitness(), y.sol->fitness()))
            return true;
        if (better(y.sol->fitness(), x.sol->fitness()))
            return false;
        if (x.is_offspring != y.is_offspring)
            return x.is_offspring;
        return x.index < y.index;
    });
}

} // namespace detail

/// Full generational replacement: the offspring become the population.
template <class S>
class GenerationalReplacement : public Replacement<S> {
public:
    Population<S> operator()(const Population<S>& parents,
                             const Population<S>& offspring) override {
        if (offspring.size() != parents.size())
            throw std::invalid_argument("generational replacement: offspring size must equal mu");
        return offspring;
    }
};

/// (mu+lambda): keep the best mu of parents and offspring together,
/// returned best-first.
template <class S>
class PlusReplacement : public Replacement<S> {
public:
    using F = fitness_t<S>;

    explicit PlusReplacement(Better<F> better) : better_(better) {}

    Population<S> operator()(const Population<S>& parents,
                             const Population<S>& offspring) override {
        const std::size_t mu = parents.size();
        std::vector<detail::MergedRef<S>> all;
        all.reserve(parents.size() + offspring.size());
        for (std::size_t i = 0; i < offspring.size(); ++i)
            all.push_back({&offspring[i], true, i});
        for (std::size_t i = 0; i < parents.size(); ++i)
            all.push_back({&parents[i], false, i});
        detail::sort_candidates(all, better_);
        Population<S> next;
        next.reserve(mu);
        for (std::size_t i = 0; i < mu; ++i)
            next.push_back(*all[i].sol);
        return next;
    }

private:
    Better<F> better_;
};

/// (mu,lambda): keep the best mu offspring, returned best-first. With weak
/// elitism, if the best parent strictly beats the best offspring it takes
/// the worst survivor's slot.
template <class S>
class CommaReplacement : public Replacement<S> {
public:
    using F = fitness_t<S>;

    CommaReplacement(Better<F> better, bool weak_elitism = false)
        : better_(better), weak_elitism_(weak_elitism) {}

    Population<S> operator()(const Population<S>& parents,
                             const Population<S>& offspring) override {
        const std::size_t mu = parents.size();
        if (offspring.size() < mu)
            throw std::invalid_argument("comma replacement: fewer offspring than mu");
        std::vector<detail::MergedRef<S>> all;
        all.reserve(offspring.size());
        for (std::size_t i = 0; i < offspring.size(); ++i)
            all.push_back({&offspring[i], true, i});
        detail::sort_candidates(all, better_);
        Population<S> next;
        next.reserve(mu);
        for (std::size_t i = 0; i < mu; ++i)
            next.push_back(*all[i].sol);
        if (weak_elitism_ && !parents.empty()) {
            const S& parent_best = parents[best_index(parents, better_)];
            if (better_(parent_best.fitness(), next.front().fitness()))
                next.back() = parent_best;
        }
        return next;
    }

private:
    Better<F> better_;
    bool weak_elitism_;
};

} // namespace metaforge::ea
