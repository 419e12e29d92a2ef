#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "metaforge/core/fitness.hpp"
#include "metaforge/core/rng.hpp"
#include "metaforge/mo/neighborhood.hpp"

namespace metaforge::mo {

enum class ImprovementMode { first, best };

inline constexpr std::size_t unlimited_steps = std::numeric_limits<std::size_t>::max();

/// Hill climbing over the one-flip neighborhood with incremental evaluation.
///
/// Repeatedly applies the improving move (first found in index order, or the
/// best of a full scan; scan ties keep the lower move index). Stops at a
/// local optimum — certified by a final full scan with no improving move —
/// or when the step budget / continue hook runs out. Returns the number of
/// moves applied; the solution never gets worse.
inline std::size_t hill_climb(BitSolution& s, const OneFlipNeighborhood& nb,
                              NeighborEvaluator& eval, ImprovementMode mode,
                              Better<double> better, std::size_t max_steps = unlimited_steps,
                              const std::function<bool()>* keep_going = nullptr) {
    eval.ensure_evaluated(s);
    std::size_t steps = 0;
    while (steps < max_steps && (!keep_going || (*keep_going)())) {
        const std::size_t n = nb.size(s.genotype());
        std::size_t best_move = n;
        double best_f = s.fitness();
        for (std::size_t m = 0; m < n; ++m) {
            const double f = eval(s, m);
            if (better(f, best_f)) {
                best_f = f;
                best_move = m;
                if (mode == ImprovementMode::first)
                    break;
            }
        }
        if (best_move == n)
            break; // local optimum
        nb.apply(s.genotype(), best_move);
        s.set_fitness(best_f);
        ++steps;
    }
    return steps;
}

/// Metropolis acceptance for a worsening move: delta_quality <= 0 is the
/// direction-normalized fitness change; accepted with probability
/// exp(delta/T).
inline bool metropolis_accept(double delta_quality, double temperature, RngStream& rng) {
    if (delta_quality >= 0.0)
        return true;
    return rng.uniform01() < std::exp(delta_quality / temperature);
}

struct SaSchedule {
    double t0;
    double alpha;
    std::size_t steps_per_t;
    double tmin;
};

/// Simulated annealing with geometric cooling; returns the best solution
/// visited. Improving and equal moves are always accepted; worsening moves
/// pass through metropolis_accept.
inline BitSolution simulated_annealing(BitSolution s, const OneFlipNeighborhood& nb,
                                       NeighborEvaluator& eval, const SaSchedule& schedule,
                                       Better<double> better, RngStream& rng,
                                       const std::function<bool()>* keep_going = nullptr) {
    if (!(schedule.t0 > schedule.tmin) || !(schedule.tmin > 0.0))
        throw std::invalid_argument("simulated_annealing: requires T0 > Tmin > 0");
    if (!(schedule.alpha > 0.0) || !(schedule.alpha < 1.0))
        throw std::invalid_argument("simulated_annealing: requires 0 < alpha < 1");
    if (schedule.steps_per_t == 0)
        throw std::invalid_argument("simulated_annealing: steps_per_T must be >= 1");

    eval.ensure_evaluated(s);
    const double sign = better.direction == Direction::maximize ? 1.0 : -1.0;
    BitSolution best = s;
    double t = schedule.t0;
    while (t >= schedule.tmin) {
        for (std::size_t step = 0; step < schedule.steps_per_t; ++step) {
            if (keep_going && !(*keep_going)())
                return best;
            const std::size_t move = rng.index(nb.size(s.genotype()));
            const double f = eval(s, move);
            const double delta = sign * (f - s.fitness());
            if (metropolis_accept(delta, t, rng)) {
                nb.apply(s.genotype(), move);
                s.set_fitness(f);
                if (better(s.fitness(), best.fitness()))
                    best = s;
            }
        }
        t *= schedule.alpha;
    }
    return best;
}

/// Fitness trace of a walk; length is steps+1 (includes the start).
struct WalkTrace {
    std::vector<double> fitnesses;
};

/// Uniform random walk recording fitness through incremental evaluation.
inline WalkTrace random_walk(BitSolution s, const OneFlipNeighborhood& nb,
                             NeighborEvaluator& eval, std::size_t steps, RngStream& rng) {
    eval.ensure_evaluated(s);
    WalkTrace trace;
    trace.fitnesses.reserve(steps + 1);
    trace.fitnesses.push_back(s.fitness());
    for (std::size_t i = 0; i < steps; ++i) {
        const std::size_t move = rng.index(nb.size(s.genotype()));
        const double f = eval(s, move);
        nb.apply(s.genotype(), move);
        s.set_fitness(f);
        trace.fitnesses.push_back(f);
    }
    return trace;
}

} // namespace metaforge::mo
