#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "metaforge/core/fitness.hpp"
#include "metaforge/core/solution.hpp"

namespace metaforge {

/// Thrown by EvalCounter when a hard evaluation budget is exhausted.
/// Run harnesses catch this and treat the current population state as final.
class EvalBudgetExceeded : public std::runtime_error {
public:
    explicit EvalBudgetExceeded(std::uint64_t budget)
        : std::runtime_error("evaluation budget of " + std::to_string(budget) + " exhausted"),
          budget_(budget) {}

    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

/// Thrown when an objective fails on a population member; reports which one.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(std::size_t member_index, const std::string& what)
        : std::runtime_error("evaluation of member " + std::to_string(member_index) +
                             " failed: " + what),
          member_index_(member_index) {}

    std::size_t member_index() const { return member_index_; }

private:
    std::size_t member_index_;
};

/// Read-only view of evaluation progress, used by continuators and monitors.
template <class F>
class EvalProgress {
public:
    virtual ~EvalProgress() = default;
    virtual std::uint64_t count() const = 0;
    virtual const std::optional<F>& best() const = 0;
};

/// Counting wrapper around an objective function.
///
/// count() is the exact number of full objective invocations since
/// construction or reset; best() is monotone in the improving direction.
/// Incremental (delta) evaluations are tallied separately and never touch
/// count(). An optional hard budget makes further evaluations throw
/// EvalBudgetExceeded. Observers fire once per counted evaluation.
template <class G, class F = double>
class EvalCounter : public EvalProgress<F> {
public:
    using Objective = std::function<F(const G&)>;
    using BetterFn = std::function<bool(const F&, const F&)>;
    /// Observer arguments: (count after the evaluation, raw fitness, best so far).
    using Observer = std::function<void(std::uint64_t, const F&, const F&)>;

    explicit EvalCounter(Objective fn, BetterFn better = {})
        : fn_(std::move(fn)), better_(std::move(better)) {}

    /// Evaluate, count, track best, notify observers. Budget-checked.
    F operator()(const G& g) {
        check_budget();
        F f = fn_(g);
        commit(f);
        return f;
    }

    /// Commit an externally computed result (parallel evaluation path).
    void record(const F& f) {
        check_budget();
        commit(f);
    }

    /// Raw objective for worker threads; does not count. The objective must
    /// be pure for results to be independent of the worker count.
    const Objective& raw() const { return fn_; }

    std::uint64_t count() const override { return count_; }
    const std::optional<F>& best() const override { return best_; }

    void reset() {
        count_ = 0;
        incremental_count_ = 0;
        best_.reset();
    }

    void set_budget(std::optional<std::uint64_t> budget) { budget_ = budget; }
    const std::optional<std::uint64_t>& budget() const { return budget_; }

    /// Evaluations still allowed under the budget (max() when unbounded).
    std::uint64_t remaining() const {
        if (!budget_)
            return std::numeric_limits<std::uint64_t>::max();
        return *budget_ > count_ ? *budget_ - count_ : 0;
    }

    void note_incremental(std::uint64_t k = 1) { incremental_count_ += k; }
    std::uint64_t incremental_count() const { return incremental_count_; }

    void add_observer(Observer obs) { observers_.push_back(std::move(obs)); }

private:
    void check_budget() const {
        if (budget_ && count_ >= *budget_)
            throw EvalBudgetExceeded(*budget_);
    }

    void commit(const F& f) {
        ++count_;
        if (better_ && (!best_ || better_(f, *best_)))
            best_ = f;
        if (!observers_.empty()) {
            const F& b = best_ ? *best_ : f;
            for (const auto& obs : observers_)
                obs(count_, f, b);
        }
    }

    Objective fn_;
    BetterFn better_;
    std::uint64_t count_ = 0;
    std::uint64_t incremental_count_ = 0;
    std::optional<F> best_{};
    std::optional<std::uint64_t> budget_{};
    std::vector<Observer> observers_{};
};

/// Evaluate every invalid member in index order; valid members are not
/// re-evaluated. Returns the number of objective calls made. An objective
/// error aborts the call and reports the failing member.
template <class S, class G, class F>
std::size_t evaluate_population(Population<S>& pop, EvalCounter<G, F>& eval) {
    std::size_t done = 0;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        auto& s = pop[i];
        if (s.valid())
            continue;
        try {
            s.set_fitness(eval(s.genotype()));
        } catch (const EvalBudgetExceeded&) {
            throw;
        } catch (const std::exception& e) {
            throw EvaluationError(i, e.what());
        }
        ++done;
    }
    return done;
}

/// Population-evaluation stage of an algorithm. The parallel implementation
/// lives in the bench module; both are interchangeable here.
template <class S>
class PopulationEvaluator {
public:
    virtual ~PopulationEvaluator() = default;
    virtual std::size_t operator()(Population<S>& pop) = 0;
};

template <class S>
class SerialEvaluator : public PopulationEvaluator<S> {
public:
    using G = genotype_t<S>;
    using F = fitness_t<S>;

    explicit SerialEvaluator(EvalCounter<G, F>& eval) : eval_(&eval) {}

    std::size_t operator()(Population<S>& pop) override { return evaluate_population(pop, *eval_); }

private:
    EvalCounter<G, F>* eval_;
};

} // namespace metaforge
