#pragma once

#include <optional>
#include <vector>

#include "metaforge/moeo/sorting.hpp"

namespace metaforge::moeo {

/// Secondary population of mutually non-dominated solutions.
///
/// Insertion rejects anything dominated by (or objective-equal to) a member
/// and removes every member the newcomer dominates. When a capacity bound
/// overflows, the member with the smallest crowding distance is evicted
/// (ties toward the lower index).
template <class S>
class ParetoArchive {
public:
    explicit ParetoArchive(std::optional<std::size_t> capacity = std::nullopt)
        : capacity_(capacity) {}

    bool insert(const S& s) {
        const ObjectiveVector& f = s.fitness();
        for (const auto& m : members_)
            if (m.fitness() == f || dominates(m.fitness(), f))
                return false;
        std::size_t keep = 0;
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (!dominates(f, members_[i].fitness())) {
                if (keep != i)
                    members_[keep] = std::move(members_[i]);
                ++keep;
            }
        }
        members_.resize(keep);
        members_.push_back(s);
        if (capacity_ && members_.size() > *capacity_)
            evict_most_crowded();
        return true;
    }

    const Population<S>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

private:
    void evict_most_crowded() {
        std::vector<ObjectiveVector> vecs;
        vecs.reserve(members_.size());
        for (const auto& m : members_)
            vecs.push_back(m.fitness());
        const std::vector<double> crowd = crowding_distance(vecs);
        std::size_t victim = 0;
        for (std::size_t i = 1; i < crowd.size(); ++i)
            if (crowd[i] < crowd[victim])
                victim = i;
        members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(victim));
    }

    Population<S> members_;
    std::optional<std::size_t> capacity_;
};

} // namespace metaforge::moeo
