#pragma once

#include <cstdint>
#include <optional>

#include "metaforge/core/continuators.hpp"
#include "metaforge/core/ops.hpp"
#include "metaforge/ea/crossover.hpp"
#include "metaforge/ea/fastga.hpp"
#include "metaforge/ea/mutation.hpp"
#include "metaforge/ea/replacement.hpp"
#include "metaforge/ea/selection.hpp"
#include "metaforge/foundry/slots.hpp"
#include "metaforge/problems/bit.hpp"

namespace metaforge::foundry {

/// Meta-algorithm over the FastGA template: every operator and numeric
/// parameter of the algorithm is a foundry slot, so a vector of natural
/// indices picks one point of the design space. select() instantiates (or
/// reuses cached) operators; run() then behaves exactly like the directly
/// assembled algorithm under the foundry's budget and restart cap.
class FastGaFoundry {
public:
    using S = BitSolution;

    FastGaFoundry(const problems::BitProblem& problem, std::uint64_t budget,
                  std::size_t restart_cap = 1)
        : problem_(&problem), budget_(budget), restart_cap_(restart_cap),
          init_(problem.dimension()) {
        registry_.register_slot(pop_sizes);
        registry_.register_slot(crossovers);
        registry_.register_slot(crossover_rates);
        registry_.register_slot(mutations);
        registry_.register_slot(mutation_rates);
        registry_.register_slot(parent_selections);
        registry_.register_slot(mutation_selections);
        registry_.register_slot(replacements);
    }

    // Slots in encoding order (Listing-style public access).
    ValueSlot<std::size_t> pop_sizes{"pop-size"};
    OperatorSlot<Crossover<S>> crossovers{"crossover"};
    ValueSlot<double> crossover_rates{"crossover-rate"};
    OperatorSlot<Mutation<S>> mutations{"mutation"};
    ValueSlot<double> mutation_rates{"mutation-rate"};
    OperatorSlot<SelectOne<S>> parent_selections{"parent-selection"};
    OperatorSlot<SelectOne<S>> mutation_selections{"mutation-selection"};
    OperatorSlot<Replacement<S>> replacements{"replacement"};

    const SlotRegistry& slots() const { return registry_; }
    const problems::BitProblem& problem() const { return *problem_; }
    std::uint64_t budget() const { return budget_; }
    std::size_t restart_cap() const { return restart_cap_; }

    unsigned long long design_space_size() const { return registry_.design_space_size(); }

    /// Choose the point of the design space to run. Freezes the slots;
    /// invalid encodings fail fast with slot-name diagnostics.
    void select(const EncodedAlgorithm& encoding) {
        registry_.freeze_all();
        registry_.validate(encoding);
        selected_ = encoding;
    }

    const std::optional<EncodedAlgorithm>& selected() const { return selected_; }

    /// Run the selected algorithm on `pop` in place. An empty population is
    /// initialized to the encoded population size. The budget applies
    /// through a max-evaluations continuator on `progress`; fresh
    /// populations are restarted while budget remains, up to the cap.
    void run(Population<S>& pop, PopulationEvaluator<S>& evaluate,
             const EvalProgress<double>& progress, RngStream& rng) {
        if (!selected_)
            throw FoundryError("foundry: run before select");
        const EncodedAlgorithm& e = *selected_;
        const std::size_t mu = pop_sizes.get(e[pop_sizes.index()]);

        MaxEvalsContinue<S> cont(progress, budget_);
        typename ea::FastGa<S>::Slots slots;
        slots.offspring_size = mu;
        slots.crossover = &crossovers.get(e[crossovers.index()]);
        slots.crossover_rate = crossover_rates.get(e[crossover_rates.index()]);
        slots.mutation = &mutations.get(e[mutations.index()]);
        slots.mutation_rate = mutation_rates.get(e[mutation_rates.index()]);
        slots.parent_select = &parent_selections.get(e[parent_selections.index()]);
        slots.mutation_select = &mutation_selections.get(e[mutation_selections.index()]);
        slots.replacement = &replacements.get(e[replacements.index()]);
        slots.cont = &cont;
        ea::FastGa<S> algorithm(slots, evaluate);

        starts_ = 0;
        for (;;) {
            ++starts_;
            if (pop.empty()) {
                pop.reserve(mu);
                for (std::size_t i = 0; i < mu; ++i)
                    pop.push_back(init_(rng));
            }
            algorithm(pop, rng);
            if (starts_ >= restart_cap_ || !cont(pop))
                break;
            pop.clear();
        }
    }

    /// Number of (re)starts performed by the last run().
    std::size_t starts_performed() const { return starts_; }

private:
    SlotRegistry registry_;
    const problems::BitProblem* problem_;
    std::uint64_t budget_;
    std::size_t restart_cap_;
    RandomBitInit<S> init_;
    std::optional<EncodedAlgorithm> selected_;
    std::size_t starts_ = 0;
};

/// Shipped FastGA operator catalog. For n >= 10 the design space is
/// 5 x 10 x 5 x 10 x 5 x 7 x 7 x 4 = 2,450,000 points; k-point/k-flip
/// alternatives that need k < n are dropped on smaller problems.
inline void add_default_catalog(FastGaFoundry& f) {
    using S = FastGaFoundry::S;
    const std::size_t n = f.problem().dimension();
    const Better<double> better = f.problem().better();

    for (std::size_t p : {10, 20, 50, 100, 200})
        f.pop_sizes.add(p);

    for (double bias : {0.1, 0.3, 0.5, 0.7, 0.9})
        f.crossovers.add<ea::UniformCrossover<S>>(bias);
    for (std::size_t k : {1, 3, 5, 7, 9})
        if (k < n)
            f.crossovers.add<ea::KPointCrossover<S>>(k);

    for (double r : {0.0, 0.2, 0.4, 0.6, 0.8})
        f.crossover_rates.add(r);

    for (double c : {0.5, 1.0, 2.0, 4.0, 8.0})
        f.mutations.add<ea::BitFlipRateMutation<S>>(c / static_cast<double>(n));
    for (std::size_t k : {1, 2, 3, 4, 5})
        if (k <= n)
            f.mutations.add<ea::BitFlipKMutation<S>>(k);

    for (double r : {0.0, 0.2, 0.4, 0.6, 0.8})
        f.mutation_rates.add(r);

    for (auto* slot : {&f.parent_selections, &f.mutation_selections}) {
        slot->add<ea::TournamentSelection<S>>(std::size_t{2}, better);
        slot->add<ea::TournamentSelection<S>>(std::size_t{4}, better);
        slot->add<ea::TournamentSelection<S>>(std::size_t{8}, better);
        slot->add<ea::RankLinearSelection<S>>(1.5, better);
        slot->add<ea::RankLinearSelection<S>>(2.0, better);
        slot->add<ea::RandomSelection<S>>();
        slot->add<ea::BestSelection<S>>(better);
    }

    f.replacements.add<ea::GenerationalReplacement<S>>();
    f.replacements.add<ea::PlusReplacement<S>>(better);
    f.replacements.add<ea::CommaReplacement<S>>(better, false);
    f.replacements.add<ea::CommaReplacement<S>>(better, true);
}

} // namespace metaforge::foundry
