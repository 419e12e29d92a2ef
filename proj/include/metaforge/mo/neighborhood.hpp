#pragma once

#include <cstdint>
#include <stdexcept>

#include "metaforge/core/evaluation.hpp"
#include "metaforge/core/solution.hpp"
#include "metaforge/problems/bit.hpp"

namespace metaforge::mo {

/// One-flip neighborhood over bit vectors: move m flips bit m. Enumeration
/// order is index-ascending, which makes first-improvement deterministic.
class OneFlipNeighborhood {
public:
    std::size_t size(const BitVec& x) const { return x.size(); }

    void apply(BitVec& x, std::size_t move) const {
        if (move >= x.size())
            throw std::out_of_range("one-flip: move out of range");
        x[move] ^= 1;
    }
};

/// Computes the fitness of a neighbor from an already evaluated solution.
///
/// Uses the problem's incremental evaluation when supported, touching only
/// the altered sub-parts; otherwise falls back to a full evaluation of the
/// moved copy. Incremental evaluations are tallied separately from full
/// ones, both here and on the linked EvalCounter.
class NeighborEvaluator {
public:
    explicit NeighborEvaluator(const problems::BitProblem& problem,
                               EvalCounter<BitVec, double>* counter = nullptr)
        : problem_(&problem), counter_(counter) {}

    /// Fitness of s with bit `move` flipped; s must be valid. Does not
    /// mutate s.
    double operator()(const BitSolution& s, std::size_t move) {
        if (!s.valid())
            throw std::logic_error("NeighborEvaluator: solution must be evaluated first");
        if (problem_->supports_incremental()) {
            ++delta_count_;
            if (counter_)
                counter_->note_incremental();
            return problem_->incremental(s.genotype(), s.fitness(), move);
        }
        BitVec moved = s.genotype();
        if (move >= moved.size())
            throw std::out_of_range("NeighborEvaluator: move out of range");
        moved[move] ^= 1;
        return counter_ ? (*counter_)(moved) : problem_->evaluate(moved);
    }

    /// Full-evaluates s if it is invalid (counted on the linked counter).
    void ensure_evaluated(BitSolution& s) {
        if (s.valid())
            return;
        s.set_fitness(counter_ ? (*counter_)(s.genotype()) : problem_->evaluate(s.genotype()));
    }

    const problems::BitProblem& problem() const { return *problem_; }
    std::uint64_t delta_count() const { return delta_count_; }

private:
    const problems::BitProblem* problem_;
    EvalCounter<BitVec, double>* counter_;
    std::uint64_t delta_count_ = 0;
};

} // namespace metaforge::mo
