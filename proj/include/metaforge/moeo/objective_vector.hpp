#pragma once

#include <stdexcept>
#include <vector>

#include "metaforge/core/fitness.hpp"
#include "metaforge/core/solution.hpp"

namespace metaforge::moeo {

/// Multi-dimensional fitness with a per-dimension optimization direction.
/// All comparisons require identical dimension and directions.
class ObjectiveVector {
public:
    ObjectiveVector() = default;

    ObjectiveVector(std::vector<double> values, std::vector<Direction> directions)
        : values_(std::move(values)), directions_(std::move(directions)) {
        if (values_.size() != directions_.size())
            throw std::invalid_argument("ObjectiveVector: values/directions size mismatch");
    }

    std::size_t size() const { return values_.size(); }
    double value(std::size_t i) const { return values_[i]; }
    Direction direction(std::size_t i) const { return directions_[i]; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<Direction>& directions() const { return directions_; }

    /// Value of dimension i normalized to minimization.
    double as_min(std::size_t i) const {
        return directions_[i] == Direction::minimize ? values_[i] : -values_[i];
    }

    bool compatible_with(const ObjectiveVector& other) const {
        return directions_ == other.directions_ && values_.size() == other.values_.size();
    }

    bool operator==(const ObjectiveVector& other) const = default;

private:
    std::vector<double> values_;
    std::vector<Direction> directions_;
};

/// Strict Pareto dominance: a is no worse than b in every dimension and
/// strictly better in at least one, directions respected.
inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (!a.compatible_with(b))
        throw std::invalid_argument("dominates: incompatible objective vectors");
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double va = a.as_min(i);
        const double vb = b.as_min(i);
        if (va > vb)
            return false;
        if (va < vb)
            strictly_better = true;
    }
    return strictly_better;
}

using MoBitSolution = Solution<BitVec, ObjectiveVector>;

} // namespace metaforge::moeo
