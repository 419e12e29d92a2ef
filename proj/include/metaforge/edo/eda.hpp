#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "metaforge/core/ops.hpp"
#include "metaforge/edo/distribution.hpp"

namespace metaforge::edo {

namespace detail {

/// Indices of the top fraction of the population (at least one member),
/// best first, fitness ties toward the lower index.
template <class S>
std::vector<std::size_t> truncation_select(const Population<S>& pop, double fraction,
                                           const Better<fitness_t<S>>& better) {
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (better(pop[a].fitness(), pop[b].fitness()))
            return true;
        if (better(pop[b].fitness(), pop[a].fitness()))
            return false;
        return a < b;
    });
    const auto k = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(fraction * static_cast<double>(pop.size()))));
    order.resize(std::min(k, pop.size()));
    return order;
}

} // namespace detail

/// Explicit-variation breeding stage for bit populations (UMDA-style):
/// select the top fraction, estimate a Bernoulli model, sample lambda
/// offspring. The input population is never mutated; composition with the
/// outer evolutionary loop is unchanged.
template <class S>
class BernoulliEdaBreeder : public Breeder<S> {
public:
    BernoulliEdaBreeder(double selection_fraction, std::size_t lambda, Better<double> better)
        : fraction_(selection_fraction), lambda_(lambda), better_(better) {
        if (!(fraction_ > 0.0) || fraction_ > 1.0)
            throw std::invalid_argument("eda breeder: selection fraction must be in (0, 1]");
    }

    Population<S> operator()(const Population<S>& pop, RngStream& rng) override {
        const auto chosen = detail::truncation_select(pop, fraction_, better_);
        Population<S> parents;
        parents.reserve(chosen.size());
        for (std::size_t i : chosen)
            parents.push_back(pop[i]);
        const BernoulliModel model = estimate_bernoulli(parents);
        return sample_population<S>(model, lambda_, rng);
    }

private:
    double fraction_;
    std::size_t lambda_;
    Better<double> better_;
};

/// Same explicit-variation stage with a diagonal Gaussian model over real
/// vectors, sampling truncated to the problem bounds.
template <class S>
class GaussianEdaBreeder : public Breeder<S> {
public:
    GaussianEdaBreeder(double selection_fraction, std::size_t lambda,
                       const problems::RealBounds& bounds, Better<double> better)
        : fraction_(selection_fraction), lambda_(lambda), bounds_(&bounds), better_(better) {
        if (!(fraction_ > 0.0) || fraction_ > 1.0)
            throw std::invalid_argument("eda breeder: selection fraction must be in (0, 1]");
    }

    Population<S> operator()(const Population<S>& pop, RngStream& rng) override {
        const auto chosen = detail::truncation_select(pop, fraction_, better_);
        Population<S> parents;
        parents.reserve(chosen.size());
        for (std::size_t i : chosen)
            parents.push_back(pop[i]);
        const GaussianDiagModel model = estimate_gaussian_diag(parents, bounds_);
        return sample_population<S>(model, lambda_, *bounds_, rng);
    }

private:
    double fraction_;
    std::size_t lambda_;
    const problems::RealBounds* bounds_;
    Better<double> better_;
};

} // namespace metaforge::edo
