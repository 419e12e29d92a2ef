#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "metaforge/core/ops.hpp"

namespace metaforge::ea {

/// Uniform crossover: each position is exchanged with probability `bias`.
/// Both arguments are altered in place; changed is true only if an exchange
/// touched differing bits.
template <class S>
class UniformCrossover : public Crossover<S> {
public:
    explicit UniformCrossover(double bias) : bias_(bias) {
        if (bias_ < 0.0 || bias_ > 1.0)
            throw std::invalid_argument("uniform crossover: bias must be in [0, 1]");
    }

    bool operator()(S& a, S& b, RngStream& rng) override {
        auto& xa = a.genotype();
        auto& xb = b.genotype();
        if (xa.size() != xb.size())
            throw std::invalid_argument("uniform crossover: length mismatch");
        if (bias_ <= 0.0)
            return false;
        bool changed = false;
        for (std::size_t i = 0; i < xa.size(); ++i) {
            if (rng.coin(bias_) && xa[i] != xb[i]) {
                std::swap(xa[i], xb[i]);
                changed = true;
            }
        }
        if (changed) {
            a.invalidate();
            b.invalidate();
        }
        return changed;
    }

    double bias() const { return bias_; }

private:
    double bias_;
};

/// Apply k-point segment exchange for the given sorted cut positions.
/// A cut at position p is the boundary before index p; exchange toggles at
/// each cut, with the leading segment kept. Exposed for direct testing.
template <class G>
bool kpoint_exchange(G& a, G& b, const std::vector<std::size_t>& cuts) {
    bool changed = false;
    bool swapping = false;
    std::size_t ci = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ci < cuts.size() && cuts[ci] == i) {
            swapping = !swapping;
            ++ci;
        }
        if (swapping && a[i] != b[i]) {
            std::swap(a[i], b[i]);
            changed = true;
        }
    }
    return changed;
}

/// k-point crossover: k distinct cut points are drawn from the n-1
/// boundaries and alternating segments are exchanged in place.
template <class S>
class KPointCrossover : public Crossover<S> {
public:
    explicit KPointCrossover(std::size_t k) : k_(k) {
        if (k_ == 0)
            throw std::invalid_argument("k-point crossover: k must be >= 1");
    }

    bool operator()(S& a, S& b, RngStream& rng) override {
        auto& xa = a.genotype();
        auto& xb = b.genotype();
        if (xa.size() != xb.size())
            throw std::invalid_argument("k-point crossover: length mismatch");
        if (k_ >= xa.size())
            throw std::invalid_argument("k-point crossover: k must be < genotype length");
        std::vector<std::size_t> cuts(xa.size() - 1);
        std::iota(cuts.begin(), cuts.end(), std::size_t{1});
        partial_shuffle(cuts, k_, rng);
        cuts.resize(k_);
        std::sort(cuts.begin(), cuts.end());
        const bool changed = kpoint_exchange(xa, xb, cuts);
        if (changed) {
            a.invalidate();
            b.invalidate();
        }
        return changed;
    }

    std::size_t cut_points() const { return k_; }

private:
    std::size_t k_;
};

} // namespace metaforge::ea
