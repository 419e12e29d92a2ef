#pragma once

#include "metaforge/core/ops.hpp"
#include "metaforge/mo/local_search.hpp"
#include "metaforge/mo/neighborhood.hpp"

namespace metaforge::ea {

/// Wraps a hill climber as a variation operator, so a local search built
/// from the mo components can sit inside an evolutionary pipeline (memetic
/// hybridization). changed is true iff the climber moved the solution; full
/// evaluations triggered on invalid inputs flow into the evaluator's shared
/// counter, incremental ones are tallied on the neighbor evaluator.
template <class S>
class HillClimbVariation : public Mutation<S> {
public:
    HillClimbVariation(mo::NeighborEvaluator& eval, mo::ImprovementMode mode,
                       Better<double> better, std::size_t max_steps = mo::unlimited_steps)
        : eval_(&eval), mode_(mode), better_(better), max_steps_(max_steps) {}

    bool operator()(S& s, RngStream&) override {
        const std::size_t steps = mo::hill_climb(s, nb_, *eval_, mode_, better_, max_steps_);
        return steps > 0;
    }

private:
    mo::OneFlipNeighborhood nb_;
    mo::NeighborEvaluator* eval_;
    mo::ImprovementMode mode_;
    Better<double> better_;
    std::size_t max_steps_;
};

} // namespace metaforge::ea
