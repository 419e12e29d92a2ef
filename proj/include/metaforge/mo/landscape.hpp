#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "metaforge/core/encoding.hpp"
#include "metaforge/mo/local_search.hpp"
#include "metaforge/mo/neighborhood.hpp"
#include "metaforge/problems/bit.hpp"

namespace metaforge::mo {

/// Sample autocorrelation of a walk trace at the given lag:
///   rho(k) = (sum_{t} d_t d_{t+k} / (n-k)) / (sum_t d_t^2 / n)
/// with d_t the deviations from the trace mean. This estimator gives
/// exactly -1 on an alternating series at lag 1 and rho(0) = 1.
inline double autocorrelation(const std::vector<double>& trace, std::size_t lag) {
    const std::size_t n = trace.size();
    if (n <= lag)
        throw std::invalid_argument("autocorrelation: trace length must exceed lag");
    double mean = 0.0;
    for (double f : trace)
        mean += f;
    mean /= static_cast<double>(n);
    double sq = 0.0;
    for (double f : trace)
        sq += (f - mean) * (f - mean);
    if (sq == 0.0)
        throw std::domain_error("autocorrelation: trace has zero variance");
    double cross = 0.0;
    for (std::size_t t = 0; t + lag < n; ++t)
        cross += (trace[t] - mean) * (trace[t + lag] - mean);
    return (cross / static_cast<double>(n - lag)) / (sq / static_cast<double>(n));
}

inline double autocorrelation(const WalkTrace& trace, std::size_t lag) {
    return autocorrelation(trace.fitnesses, lag);
}

struct AdaptiveWalkStats {
    std::vector<std::size_t> lengths;
    double mean = 0.0;
};

/// Best-improvement hill climbs from uniform random starts; records the
/// number of steps to each local optimum.
inline AdaptiveWalkStats adaptive_walk_length(const problems::BitProblem& problem,
                                              std::size_t restarts, RngStream& rng) {
    if (restarts == 0)
        throw std::invalid_argument("adaptive_walk_length: restarts must be >= 1");
    OneFlipNeighborhood nb;
    NeighborEvaluator eval(problem);
    AdaptiveWalkStats stats;
    stats.lengths.reserve(restarts);
    double total = 0.0;
    for (std::size_t r = 0; r < restarts; ++r) {
        BitSolution s(random_bitvec(problem.dimension(), rng));
        const std::size_t len =
            hill_climb(s, nb, eval, ImprovementMode::best, problem.better());
        stats.lengths.push_back(len);
        total += static_cast<double>(len);
    }
    stats.mean = total / static_cast<double>(restarts);
    return stats;
}

/// Pearson correlation between fitness and Hamming distance to the optimum.
inline double fitness_distance_correlation(
    const std::vector<std::pair<BitVec, double>>& samples, const BitVec& optimum) {
    const std::size_t n = samples.size();
    if (n < 2)
        throw std::invalid_argument("fitness_distance_correlation: need at least 2 samples");
    double mf = 0.0;
    double md = 0.0;
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        dist[i] = static_cast<double>(hamming_distance(samples[i].first, optimum));
        mf += samples[i].second;
        md += dist[i];
    }
    mf /= static_cast<double>(n);
    md /= static_cast<double>(n);
    double sff = 0.0;
    double sdd = 0.0;
    double sfd = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double df = samples[i].second - mf;
        const double dd = dist[i] - md;
        sff += df * df;
        sdd += dd * dd;
        sfd += df * dd;
    }
    if (sff == 0.0 || sdd == 0.0)
        throw std::domain_error("fitness_distance_correlation: zero variance");
    return sfd / std::sqrt(sff * sdd);
}

/// Collect (genotype, fitness) pairs from uniform random genotypes.
inline std::vector<std::pair<BitVec, double>>
random_fitness_samples(const problems::BitProblem& problem, std::size_t count, RngStream& rng) {
    std::vector<std::pair<BitVec, double>> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        BitVec x = random_bitvec(problem.dimension(), rng);
        const double f = problem.evaluate(x);
        samples.emplace_back(std::move(x), f);
    }
    return samples;
}

/// Fitness histogram of uniformly sampled genotypes; one bin per distinct
/// fitness level.
inline std::map<double, std::uint64_t> density_of_states(const problems::BitProblem& problem,
                                                         std::size_t sample_size,
                                                         RngStream& rng) {
    if (sample_size == 0)
        throw std::invalid_argument("density_of_states: sample size must be >= 1");
    std::map<double, std::uint64_t> hist;
    for (std::size_t i = 0; i < sample_size; ++i)
        ++hist[problem.evaluate(random_bitvec(problem.dimension(), rng))];
    return hist;
}

/// Exact fitness histogram over all 2^n genotypes (n <= 26).
inline std::map<double, std::uint64_t>
density_of_states_exhaustive(const problems::BitProblem& problem) {
    const std::size_t n = problem.dimension();
    if (n > 26)
        throw std::invalid_argument("density_of_states_exhaustive: dimension too large");
    std::map<double, std::uint64_t> hist;
    BitVec x(n, 0);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < total; ++v) {
        for (std::size_t i = 0; i < n; ++i)
            x[i] = static_cast<std::uint8_t>((v >> i) & 1u);
        ++hist[problem.evaluate(x)];
    }
    return hist;
}

} // namespace metaforge::mo
