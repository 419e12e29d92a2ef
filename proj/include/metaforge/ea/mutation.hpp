#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "metaforge/core/ops.hpp"

namespace metaforge::ea {

/// Flips each bit independently with probability p.
///
/// Positions are drawn by geometric skipping, so the cost is proportional to
/// the number of flips rather than the genotype length; the per-bit flip
/// distribution is exactly Bernoulli(p).
template <class S>
class BitFlipRateMutation : public Mutation<S> {
public:
    explicit BitFlipRateMutation(double p) : p_(p) {
        if (p_ < 0.0 || p_ > 1.0)
            throw std::invalid_argument("bit-flip: rate must be in [0, 1]");
    }

    bool operator()(S& s, RngStream& rng) override {
        auto& x = s.genotype();
        bool changed = false;
        if (p_ >= 1.0) {
            for (auto& b : x)
                b ^= 1;
            changed = !x.empty();
        } else if (p_ > 0.0) {
            const double log1mp = std::log1p(-p_);
            std::size_t i = 0;
            while (i < x.size()) {
                const double u = 1.0 - rng.uniform01(); // (0, 1]
                const double skip = std::floor(std::log(u) / log1mp);
                if (skip >= static_cast<double>(x.size() - i))
                    break;
                i += static_cast<std::size_t>(skip);
                x[i] ^= 1;
                changed = true;
                ++i;
            }
        }
        if (changed)
            s.invalidate();
        return changed;
    }

    double rate() const { return p_; }

private:
    double p_;
};

/// Flips exactly k distinct positions, chosen uniformly.
template <class S>
class BitFlipKMutation : public Mutation<S> {
public:
    explicit BitFlipKMutation(std::size_t k) : k_(k) {}

    bool operator()(S& s, RngStream& rng) override {
        auto& x = s.genotype();
        if (k_ > x.size())
            throw std::invalid_argument("bit-flip-k: k exceeds genotype length");
        if (k_ == 0)
            return false;
        std::vector<std::size_t> idx(x.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        partial_shuffle(idx, k_, rng);
        for (std::size_t i = 0; i < k_; ++i)
            x[idx[i]] ^= 1;
        s.invalidate();
        return true;
    }

    std::size_t flips() const { return k_; }

private:
    std::size_t k_;
};

} // namespace metaforge::ea
