#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "metaforge/core/rng.hpp"
#include "metaforge/core/solution.hpp"
#include "metaforge/problems/real.hpp"

namespace metaforge::edo {

/// Per-bit independent Bernoulli distribution. Probabilities stay inside
/// [margin, 1 - margin] after estimation, so the model never collapses to a
/// point mass.
struct BernoulliModel {
    std::vector<double> p;
};

/// Diagonal Gaussian: per-coordinate mean and standard deviation, with the
/// deviations floored at a positive sigma_min.
struct GaussianDiagModel {
    RealVec mean;
    RealVec sigma;
};

/// Column means of the selected bits, clamped to [1/n, 1 - 1/n] where n is
/// the genotype dimension (PBIL-style margins).
template <class S>
BernoulliModel estimate_bernoulli(const Population<S>& pop) {
    if (pop.empty())
        throw std::invalid_argument("estimate_bernoulli: empty population");
    const std::size_t n = pop[0].genotype().size();
    BernoulliModel model;
    model.p.assign(n, 0.0);
    for (const auto& s : pop)
        for (std::size_t i = 0; i < n; ++i)
            model.p[i] += s.genotype()[i];
    const double margin = 1.0 / static_cast<double>(n);
    for (double& pi : model.p) {
        pi /= static_cast<double>(pop.size());
        pi = std::clamp(pi, margin, 1.0 - margin);
    }
    return model;
}

/// Per-coordinate sample mean and sample standard deviation (divisor n-1),
/// floored at sigma_min = 1e-12 x bound range (absolute 1e-12 without
/// bounds).
template <class S>
GaussianDiagModel estimate_gaussian_diag(const Population<S>& pop,
                                         const problems::RealBounds* bounds = nullptr) {
    if (pop.size() < 2)
        throw std::invalid_argument("estimate_gaussian_diag: need at least 2 members");
    const std::size_t n = pop[0].genotype().size();
    GaussianDiagModel model;
    model.mean.assign(n, 0.0);
    model.sigma.assign(n, 0.0);
    for (const auto& s : pop)
        for (std::size_t i = 0; i < n; ++i)
            model.mean[i] += s.genotype()[i];
    for (double& m : model.mean)
        m /= static_cast<double>(pop.size());
    for (const auto& s : pop)
        for (std::size_t i = 0; i < n; ++i) {
            const double d = s.genotype()[i] - model.mean[i];
            model.sigma[i] += d * d;
        }
    for (std::size_t i = 0; i < n; ++i) {
        const double floor_i =
            bounds ? 1e-12 * (bounds->upper[i] - bounds->lower[i]) : 1e-12;
        model.sigma[i] = std::max(std::sqrt(model.sigma[i] / static_cast<double>(pop.size() - 1)),
                                  floor_i);
    }
    return model;
}

/// `count` independent draws; returned solutions are unevaluated.
template <class S>
Population<S> sample_population(const BernoulliModel& model, std::size_t count, RngStream& rng) {
    Population<S> pop;
    pop.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        BitVec x(model.p.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = rng.coin(model.p[i]) ? 1 : 0;
        pop.push_back(S(std::move(x)));
    }
    return pop;
}

/// Gaussian draws truncated to the bounds by per-coordinate resampling
/// (up to 100 tries, then clipped). Returned solutions are unevaluated.
template <class S>
Population<S> sample_population(const GaussianDiagModel& model, std::size_t count,
                                const problems::RealBounds& bounds, RngStream& rng) {
    Population<S> pop;
    pop.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        RealVec x(model.mean.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            double v = 0.0;
            bool inside = false;
            for (int tries = 0; tries < 100 && !inside; ++tries) {
                v = model.mean[i] + model.sigma[i] * rng.normal();
                inside = v >= bounds.lower[i] && v <= bounds.upper[i];
            }
            x[i] = inside ? v : std::clamp(v, bounds.lower[i], bounds.upper[i]);
        }
        pop.push_back(S(std::move(x)));
    }
    return pop;
}

} // namespace metaforge::edo
