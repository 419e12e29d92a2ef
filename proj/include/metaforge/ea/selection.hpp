#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "metaforge/core/fitness.hpp"
#include "metaforge/core/ops.hpp"

namespace metaforge::ea {

/// Draws k members uniformly with replacement and returns the best.
/// Fitness ties are resolved toward the lower population index.
template <class S>
class TournamentSelection : public SelectOne<S> {
public:
    using F = fitness_t<S>;

    TournamentSelection(std::size_t k, Better<F> better) : k_(k), better_(better) {
        if (k_ == 0)
            throw std::invalid_argument("tournament: k must be >= 1");
    }

    const S& operator()(const Population<S>& pop, RngStream& rng) override {
        if (pop.empty())
            throw std::invalid_argument("tournament: empty population");
        std::size_t best = rng.index(pop.size());
        for (std::size_t i = 1; i < k_; ++i) {
            const std::size_t c = rng.index(pop.size());
            const bool strictly = better_(pop[c].fitness(), pop[best].fitness());
            const bool tie = !strictly && !better_(pop[best].fitness(), pop[c].fitness());
            if (strictly || (tie && c < best))
                best = c;
        }
        return pop[best];
    }

    std::size_t tournament_size() const { return k_; }

private:
    std::size_t k_;
    Better<F> better_;
};

/// Fitness-proportionate selection over raw fitness mass. Requires
/// non-negative fitnesses with a strictly positive total.
template <class S>
class RouletteSelection : public SelectOne<S> {
public:
    const S& operator()(const Population<S>& pop, RngStream& rng) override {
        if (pop.empty())
            throw std::invalid_argument("roulette: empty population");
        double total = 0.0;
        for (const auto& s : pop) {
            const double f = s.fitness();
            if (f < 0.0)
                throw std::domain_error("roulette: negative fitness");
            total += f;
        }
        if (!(total > 0.0))
            throw std::domain_error("roulette: non-positive total fitness");
        const double r = rng.uniform(0.0, total);
        double cum = 0.0;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            cum += pop[i].fitness();
            if (r < cum)
                return pop[i];
        }
        return pop.back();
    }
};

/// Deterministically returns the best member (ties toward the lower index).
template <class S>
class BestSelection : public SelectOne<S> {
public:
    using F = fitness_t<S>;

    explicit BestSelection(Better<F> better) : better_(better) {}

    const S& operator()(const Population<S>& pop, RngStream&) override {
        return pop[best_index(pop, better_)];
    }

private:
    Better<F> better_;
};

/// Uniform random pick.
template <class S>
class RandomSelection : public SelectOne<S> {
public:
    const S& operator()(const Population<S>& pop, RngStream& rng) override {
        if (pop.empty())
            throw std::invalid_argument("random selection: empty population");
        return pop[rng.index(pop.size())];
    }
};

/// Linear ranking selection. The pressure s in [1, 2] assigns the worst
/// member probability (2-s)/mu and the best s/mu, linearly in between.
template <class S>
class RankLinearSelection : public SelectOne<S> {
public:
    using F = fitness_t<S>;

    RankLinearSelection(double pressure, Better<F> better) : s_(pressure), better_(better) {
        if (s_ < 1.0 || s_ > 2.0)
            throw std::invalid_argument("rank-linear: pressure must be in [1, 2]");
    }

    const S& operator()(const Population<S>& pop, RngStream& rng) override {
        if (pop.empty())
            throw std::invalid_argument("rank-linear: empty population");
        const std::size_t n = pop.size();
        if (n == 1)
            return pop[0];
        // Worst-first order; ties keep the lower index at the better rank.
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (better_(pop[b].fitness(), pop[a].fitness()))
                return true;
            if (better_(pop[a].fitness(), pop[b].fitness()))
                return false;
            return a > b;
        });
        const double mu = static_cast<double>(n);
        const double r = rng.uniform01();
        double cum = 0.0;
        for (std::size_t rank = 0; rank < n; ++rank) {
            cum += (2.0 - s_) / mu +
                   2.0 * static_cast<double>(rank) * (s_ - 1.0) / (mu * (mu - 1.0));
            if (r < cum)
                return pop[order[rank]];
        }
        return pop[order.back()];
    }

private:
    double s_;
    Better<F> better_;
};

/// Draws `count` members by repeated single selection, with replacement.
template <class S>
Population<S> select_many(SelectOne<S>& select, const Population<S>& pop, std::size_t count,
                          RngStream& rng) {
    Population<S> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(select(pop, rng));
    return out;
}

} // namespace metaforge::ea
