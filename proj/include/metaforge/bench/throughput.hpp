#pragma once

#include <chrono>
#include <cstdint>

#include "metaforge/core/continuators.hpp"
#include "metaforge/ea/algorithm.hpp"
#include "metaforge/ea/mutation.hpp"
#include "metaforge/ea/replacement.hpp"
#include "metaforge/ea/selection.hpp"
#include "metaforge/edo/eda.hpp"
#include "metaforge/problems/bit.hpp"
#include "metaforge/problems/real.hpp"

namespace metaforge::bench {

struct ThroughputReport {
    std::uint64_t evaluations = 0;
    double seconds = 0.0;
    double evals_per_sec = 0.0;
};

/// Time a (10+10) GA with one-per-n bit-flip mutation over the given
/// evaluation budget, single-threaded.
inline ThroughputReport measure_throughput(const problems::BitProblem& pb, std::uint64_t budget,
                                           std::uint64_t seed) {
    using S = BitSolution;
    const Better<double> better = pb.better();
    EvalCounter<BitVec, double> counter(pb.objective(), better);
    SerialEvaluator<S> evaluate(counter);
    RandomBitInit<S> init(pb.dimension());
    ea::TournamentSelection<S> select(2, better);
    ea::BitFlipRateMutation<S> mutate(1.0 / static_cast<double>(pb.dimension()));
    ea::SgaVariation<S> vary(nullptr, 0.0, &mutate, 1.0);
    ea::SelectVaryBreeder<S> breed(select, vary, 10);
    ea::PlusReplacement<S> replace(better);
    MaxEvalsContinue<S> cont(counter, budget);
    RngStream rng(seed);

    const auto start = std::chrono::steady_clock::now();
    ea::run_ea(init, evaluate, breed, replace, cont, 10, rng);
    const auto stop = std::chrono::steady_clock::now();

    ThroughputReport report;
    report.evaluations = counter.count();
    report.seconds = std::chrono::duration<double>(stop - start).count();
    report.evals_per_sec =
        report.seconds > 0.0 ? static_cast<double>(report.evaluations) / report.seconds : 0.0;
    return report;
}

/// Time a (50/100) diagonal-Gaussian EDA over the given budget.
inline ThroughputReport measure_throughput(const problems::RealProblem& pb, std::uint64_t budget,
                                           std::uint64_t seed) {
    using S = RealSolution;
    const Better<double> better = pb.better();
    EvalCounter<RealVec, double> counter(pb.objective(), better);
    SerialEvaluator<S> evaluate(counter);
    edo::GaussianEdaBreeder<S> breed(0.5, 100, pb.bounds(), better);
    ea::GenerationalReplacement<S> replace;
    MaxEvalsContinue<S> cont(counter, budget);
    RngStream rng(seed);

    const auto start = std::chrono::steady_clock::now();
    Population<S> pop;
    pop.reserve(100);
    for (std::size_t i = 0; i < 100; ++i) {
        RealVec x(pb.dimension());
        for (std::size_t d = 0; d < x.size(); ++d)
            x[d] = rng.uniform(pb.bounds().lower[d], pb.bounds().upper[d]);
        pop.push_back(S(std::move(x)));
    }
    ea::run_ea_loop(pop, evaluate, breed, replace, cont, rng);
    const auto stop = std::chrono::steady_clock::now();

    ThroughputReport report;
    report.evaluations = counter.count();
    report.seconds = std::chrono::duration<double>(stop - start).count();
    report.evals_per_sec =
        report.seconds > 0.0 ? static_cast<double>(report.evaluations) / report.seconds : 0.0;
    return report;
}

} // namespace metaforge::bench
