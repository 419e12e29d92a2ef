#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "metaforge/bench/ranges.hpp"

namespace metaforge::bench {

/// Run-aggregated attainment counts over (target bucket x budget bucket).
/// Cell (i, j) counts the folded runs that reached target bucket >= i
/// within budget bucket <= j.
struct EcdfMatrix {
    std::size_t target_buckets = 0;
    std::size_t budget_buckets = 0;
    std::vector<std::uint64_t> counts; // row-major, target rows
    std::uint64_t runs_folded = 0;

    std::uint64_t at(std::size_t target_row, std::size_t budget_col) const {
        return counts[target_row * budget_buckets + budget_col];
    }
};

inline std::uint64_t ecdf_sum(const EcdfMatrix& m) {
    return std::accumulate(m.counts.begin(), m.counts.end(), std::uint64_t{0});
}

/// In-memory discrete ECDF logger over quality and evaluation-count axes.
///
/// Within a run, observations must arrive with non-decreasing evaluation
/// counts and the quality value (direction-adjusted best-so-far) must be
/// monotone non-decreasing. Per-run attainment is therefore monotone along
/// the budget axis and downward-closed along the target axis by
/// construction; fold_run() adds the run's 0/1 attainment into the counts.
class EcdfLogger {
public:
    EcdfLogger(LinearRange target_range, LinearRange budget_range)
        : targets_(target_range), budgets_(budget_range),
          matrix_{target_range.buckets, budget_range.buckets,
                  std::vector<std::uint64_t>(target_range.buckets * budget_range.buckets, 0), 0},
          first_budget_bucket_(target_range.buckets, unset) {}

    void start_run() {
        if (run_open_)
            throw std::logic_error("EcdfLogger: start_run with a run already open");
        run_open_ = true;
        last_evals_ = 0;
        attained_rows_ = 0;
        std::fill(first_budget_bucket_.begin(), first_budget_bucket_.end(), unset);
    }

    void observe(std::uint64_t eval_count, double quality) {
        if (!run_open_)
            throw std::logic_error("EcdfLogger: observe outside a run");
        if (eval_count < last_evals_)
            throw std::invalid_argument("EcdfLogger: decreasing evaluation count within a run");
        last_evals_ = eval_count;
        const std::size_t row = targets_.bucket(quality);
        const std::size_t col = budgets_.bucket(static_cast<double>(eval_count));
        // Quality is monotone, so only rows above the attained prefix are new;
        // their first budget bucket is the current one.
        for (std::size_t i = attained_rows_; i <= row; ++i)
            first_budget_bucket_[i] = col;
        if (row + 1 > attained_rows_)
            attained_rows_ = row + 1;
    }

    /// Fold the open run's attainment into the aggregate and reset it.
    void fold_run() {
        if (!run_open_)
            throw std::logic_error("EcdfLogger: fold_run without an open run");
        for (std::size_t i = 0; i < matrix_.target_buckets; ++i) {
            if (first_budget_bucket_[i] == unset)
                continue;
            for (std::size_t j = first_budget_bucket_[i]; j < matrix_.budget_buckets; ++j)
                ++matrix_.counts[i * matrix_.budget_buckets + j];
        }
        ++matrix_.runs_folded;
        run_open_ = false;
    }

    const EcdfMatrix& matrix() const { return matrix_; }
    const LinearRange& target_range() const { return targets_; }
    const LinearRange& budget_range() const { return budgets_; }

private:
    static constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();

    LinearRange targets_;
    LinearRange budgets_;
    EcdfMatrix matrix_;
    std::vector<std::size_t> first_budget_bucket_; // per target row, current run
    std::size_t attained_rows_ = 0;
    std::uint64_t last_evals_ = 0;
    bool run_open_ = false;
};

} // namespace metaforge::bench
