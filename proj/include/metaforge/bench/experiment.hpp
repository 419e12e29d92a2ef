#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "metaforge/bench/ecdf.hpp"
#include "metaforge/bench/parallel.hpp"
#include "metaforge/core/evaluation.hpp"
#include "metaforge/foundry/fastga_foundry.hpp"
#include "metaforge/problems/bit.hpp"

namespace metaforge::bench {

/// Outcome of one seeded run.
struct RunRecord {
    std::uint64_t run_seed = 0;
    foundry::EncodedAlgorithm encoding;
    std::string problem_id;
    std::optional<double> final_best;
    std::uint64_t evaluations = 0; // always <= budget
};

struct ExperimentConfig {
    std::size_t runs = 1;
    std::uint64_t master_seed = 1;
    std::uint64_t budget = 10000;
    std::size_t workers = 1;
    std::size_t target_buckets = 100;
    std::size_t budget_buckets = 100;
    std::optional<std::string> out_dir; // CSV trajectory logs when set
};

struct ExperimentResult {
    long long cost = 0; // -ecdf_sum: tuners minimize
    std::vector<std::pair<std::string, EcdfMatrix>> matrices; // one per problem
    std::vector<RunRecord> records;
};

namespace detail {

/// Collects (evaluations, raw_y, best_y) rows: one per improving evaluation
/// plus the final evaluation.
class TrajectoryRecorder {
public:
    struct Row {
        std::uint64_t evaluations;
        double raw;
        double best;
    };

    void observe(std::uint64_t count, double raw, double best) {
        last_raw_ = raw;
        last_count_ = count;
        if (rows_.empty() || best != rows_.back().best)
            rows_.push_back(Row{count, raw, best});
    }

    void finish() {
        if (!rows_.empty() && rows_.back().evaluations != last_count_)
            rows_.push_back(Row{last_count_, last_raw_, rows_.back().best});
    }

    const std::vector<Row>& rows() const { return rows_; }

private:
    std::vector<Row> rows_;
    double last_raw_ = 0.0;
    std::uint64_t last_count_ = 0;
};

inline void write_trajectory_csv(const std::string& path, const TrajectoryRecorder& rec) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("trajectory log: cannot open '" + path + "' for writing");
    out << "evaluations,raw_y,best_y\n";
    char a[32];
    char b[32];
    for (const auto& row : rec.rows()) {
        std::snprintf(a, sizeof a, "%.17g", row.raw);
        std::snprintf(b, sizeof b, "%.17g", row.best);
        out << row.evaluations << "," << a << "," << b << "\n";
    }
    if (!out)
        throw std::runtime_error("trajectory log: write to '" + path + "' failed");
}

} // namespace detail

/// Direction-adjusted quality: monotone non-decreasing as the best-so-far
/// improves, regardless of the problem's optimization direction.
inline double quality_of(double fitness, Direction dir) {
    return dir == Direction::maximize ? fitness : -fitness;
}

/// Quality range of a problem, for ECDF target bucketing.
inline LinearRange target_range_of(const problems::BitProblem& pb, std::size_t buckets) {
    const double lo = quality_of(pb.direction() == Direction::maximize ? pb.fitness_lower_bound()
                                                                       : pb.fitness_upper_bound(),
                                 pb.direction());
    const double hi = quality_of(pb.direction() == Direction::maximize ? pb.fitness_upper_bound()
                                                                       : pb.fitness_lower_bound(),
                                 pb.direction());
    return LinearRange(lo, hi, buckets);
}

/// A runnable algorithm: mutates the (possibly empty) population, drawing
/// evaluations through the given evaluator.
using BitAlgorithm = std::function<void(Population<BitSolution>&,
                                        PopulationEvaluator<BitSolution>&,
                                        EvalCounter<BitVec, double>&, RngStream&)>;

/// Execute runs x problems independent seeded runs of `algorithm`, folding
/// each into a per-problem ECDF. Run k of problem p uses the stream derived
/// from (master seed, p * runs + k). Each run is hard-capped at the budget,
/// so records always satisfy evaluations <= budget. Returns cost =
/// -(total ecdf sum) plus the per-run records; deterministic given the
/// master seed.
inline ExperimentResult run_experiment(const BitAlgorithm& algorithm,
                                       const std::vector<const problems::BitProblem*>& problems,
                                       const ExperimentConfig& cfg,
                                       const foundry::EncodedAlgorithm& encoding = {}) {
    if (cfg.runs == 0)
        throw std::invalid_argument("run_experiment: runs must be >= 1");
    ExperimentResult result;
    std::uint64_t total = 0;
    for (std::size_t p = 0; p < problems.size(); ++p) {
        const problems::BitProblem& pb = *problems[p];
        const Direction dir = pb.direction();
        EcdfLogger logger(target_range_of(pb, cfg.target_buckets),
                          LinearRange(0.0, static_cast<double>(std::max<std::uint64_t>(
                                               cfg.budget, 1)),
                                      cfg.budget_buckets));
        for (std::size_t k = 0; k < cfg.runs; ++k) {
            RngStream stream(cfg.master_seed,
                             static_cast<std::uint64_t>(p) * cfg.runs + k);
            EvalCounter<BitVec, double> counter(pb.objective(), pb.better());
            counter.set_budget(cfg.budget);
            logger.start_run();
            counter.add_observer([&](std::uint64_t count, const double&, const double& best) {
                logger.observe(count, quality_of(best, dir));
            });
            detail::TrajectoryRecorder recorder;
            if (cfg.out_dir)
                counter.add_observer(
                    [&](std::uint64_t count, const double& raw, const double& best) {
                        recorder.observe(count, raw, best);
                    });
            ParallelEvaluator<BitSolution> evaluate(counter, cfg.workers);
            Population<BitSolution> pop;
            try {
                algorithm(pop, evaluate, counter, stream);
            } catch (const EvalBudgetExceeded&) {
                // Budget exhausted mid-generation; the run is complete.
            }
            logger.fold_run();
            if (cfg.out_dir) {
                recorder.finish();
                detail::write_trajectory_csv(*cfg.out_dir + "/" + pb.id() + "_run" +
                                                 std::to_string(k) + "_seed" +
                                                 std::to_string(cfg.master_seed) + ".csv",
                                             recorder);
            }
            result.records.push_back(RunRecord{stream.seed(), encoding, pb.id(),
                                               counter.best(), counter.count()});
        }
        total += ecdf_sum(logger.matrix());
        result.matrices.emplace_back(pb.id(), logger.matrix());
    }
    result.cost = -static_cast<long long>(total);
    return result;
}

/// Foundry binding: run the encoded algorithm of `f` as the experiment's
/// algorithm.
inline ExperimentResult run_experiment(foundry::FastGaFoundry& f,
                                       const foundry::EncodedAlgorithm& encoding,
                                       const std::vector<const problems::BitProblem*>& problems,
                                       const ExperimentConfig& cfg) {
    f.select(encoding);
    BitAlgorithm algorithm = [&f](Population<BitSolution>& pop,
                                  PopulationEvaluator<BitSolution>& evaluate,
                                  EvalCounter<BitVec, double>& counter, RngStream& rng) {
        f.run(pop, evaluate, counter, rng);
    };
    return run_experiment(algorithm, problems, cfg, encoding);
}

} // namespace metaforge::bench
