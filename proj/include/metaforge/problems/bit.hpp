#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "metaforge/core/encoding.hpp"
#include "metaforge/core/fitness.hpp"

namespace metaforge::problems {

/// Benchmark objective over bit vectors. Implementations are immutable and
/// pure (same genotype, same fitness), hence safe for concurrent use.
class BitProblem {
public:
    virtual ~BitProblem() = default;

    virtual double evaluate(const BitVec& x) const = 0;
    virtual std::size_t dimension() const = 0;
    virtual Direction direction() const { return Direction::maximize; }
    Better<double> better() const { return Better<double>{direction()}; }

    /// Inclusive fitness range, used for ECDF target bucketing.
    virtual double fitness_lower_bound() const = 0;
    virtual double fitness_upper_bound() const = 0;

    virtual std::optional<BitVec> known_optimum() const { return std::nullopt; }

    virtual bool supports_incremental() const { return false; }

    /// Fitness of x with bit `flip` flipped, given evaluate(x) == fx.
    /// Does not mutate x. Only the touched sub-parts are recomputed.
    virtual double incremental(const BitVec& x, double fx, std::size_t flip) const {
        (void)x;
        (void)fx;
        (void)flip;
        throw std::logic_error(id() + ": incremental evaluation not supported");
    }

    /// Filesystem-safe instance name, e.g. "onemax_n100".
    virtual std::string id() const = 0;

    std::function<double(const BitVec&)> objective() const {
        return [this](const BitVec& x) { return evaluate(x); };
    }

protected:
    void check_move(const BitVec& x, std::size_t flip) const {
        if (flip >= x.size())
            throw std::out_of_range(id() + ": move index " + std::to_string(flip) +
                                    " out of range for dimension " + std::to_string(x.size()));
    }
};

class OneMax : public BitProblem {
public:
    explicit OneMax(std::size_t n) : n_(n) {}

    double evaluate(const BitVec& x) const override {
        return static_cast<double>(ones_count(x));
    }

    std::size_t dimension() const override { return n_; }
    double fitness_lower_bound() const override { return 0.0; }
    double fitness_upper_bound() const override { return static_cast<double>(n_); }

    std::optional<BitVec> known_optimum() const override { return BitVec(n_, 1); }

    bool supports_incremental() const override { return true; }

    double incremental(const BitVec& x, double fx, std::size_t flip) const override {
        check_move(x, flip);
        return fx + (x[flip] ? -1.0 : 1.0);
    }

    std::string id() const override { return "onemax_n" + std::to_string(n_); }

private:
    std::size_t n_;
};

class LeadingOnes : public BitProblem {
public:
    explicit LeadingOnes(std::size_t n) : n_(n) {}

    double evaluate(const BitVec& x) const override {
        std::size_t f = 0;
        while (f < x.size() && x[f])
            ++f;
        return static_cast<double>(f);
    }

    std::size_t dimension() const override { return n_; }
    double fitness_lower_bound() const override { return 0.0; }
    double fitness_upper_bound() const override { return static_cast<double>(n_); }

    std::optional<BitVec> known_optimum() const override { return BitVec(n_, 1); }

    bool supports_incremental() const override { return true; }

    double incremental(const BitVec& x, double fx, std::size_t flip) const override {
        check_move(x, flip);
        const auto f = static_cast<std::size_t>(fx);
        if (flip > f)
            return fx; // prefix unaffected
        if (flip < f)
            return static_cast<double>(flip); // a leading one turns off
        // Bit f was the first zero; flipping it extends the prefix up to the
        // next zero (suffix scan, the only sub-part that can change).
        std::size_t g = f + 1;
        while (g < x.size() && x[g])
            ++g;
        return static_cast<double>(g);
    }

    std::string id() const override { return "leadingones_n" + std::to_string(n_); }

private:
    std::size_t n_;
};

/// Ruggedness permutation that fixes m, swaps the pairs (m-1,m-2),
/// (m-3,m-4), ... downward, and fixes a remaining singleton 0.
inline std::vector<std::size_t> adjacent_swap_permutation(std::size_t m) {
    std::vector<std::size_t> table(m + 1);
    std::iota(table.begin(), table.end(), std::size_t{0});
    std::size_t high = m; // table[m] stays fixed
    while (high >= 2) {
        std::swap(table[high - 1], table[high - 2]);
        high -= 2;
    }
    return table;
}

/// Layered transform stack over OneMax: dummy bits (keep the first m),
/// neutrality (each block of mu bits maps to its majority bit, tie -> 0),
/// then a ruggedness permutation of the OneMax value.
class WModel : public BitProblem {
public:
    /// `table` must be a bijection on {0..m'} where m' = m / mu; pass an
    /// empty table for the identity (no ruggedness layer).
    WModel(std::size_t n, std::size_t m, std::size_t mu, std::vector<std::size_t> table = {})
        : n_(n), m_(m), mu_(mu), table_(std::move(table)) {
        if (m_ == 0 || m_ > n_)
            throw std::invalid_argument("WModel: dummy layer requires 0 < m <= n");
        if (mu_ == 0 || m_ % mu_ != 0)
            throw std::invalid_argument("WModel: neutrality mu must be >= 1 and divide m");
        const std::size_t mp = post_neutrality_dimension();
        if (!table_.empty()) {
            if (table_.size() != mp + 1)
                throw std::invalid_argument("WModel: ruggedness table must have m'+1 entries");
            auto sorted = table_;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t k = 0; k <= mp; ++k)
                if (sorted[k] != k)
                    throw std::invalid_argument("WModel: ruggedness table is not a bijection");
            inverse_.assign(mp + 1, 0);
            for (std::size_t k = 0; k <= mp; ++k)
                inverse_[table_[k]] = k;
        }
    }

    static WModel with_adjacent_swaps(std::size_t n, std::size_t m, std::size_t mu) {
        return WModel(n, m, mu, adjacent_swap_permutation(m / mu));
    }

    std::size_t post_neutrality_dimension() const { return m_ / mu_; }

    double evaluate(const BitVec& x) const override {
        if (x.size() != n_)
            throw std::invalid_argument("WModel: genotype dimension mismatch");
        std::size_t k = 0;
        for (std::size_t b = 0; b < post_neutrality_dimension(); ++b)
            k += block_bit(x, b);
        return remap(k);
    }

    std::size_t dimension() const override { return n_; }
    double fitness_lower_bound() const override { return 0.0; }
    double fitness_upper_bound() const override {
        return static_cast<double>(post_neutrality_dimension());
    }

    std::optional<BitVec> known_optimum() const override {
        // The genotype whose neutral string has k* ones, k* = argmax table.
        std::size_t kstar = post_neutrality_dimension();
        if (!table_.empty())
            kstar = inverse_.back(); // inverse_[m'] = raw value mapped to the maximum
        BitVec x(n_, 0);
        std::fill(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(kstar * mu_), 1);
        return x;
    }

    bool supports_incremental() const override { return true; }

    double incremental(const BitVec& x, double fx, std::size_t flip) const override {
        check_move(x, flip);
        if (flip >= m_)
            return fx; // dummy region
        const std::size_t b = flip / mu_;
        std::size_t cnt = 0;
        const std::size_t begin = b * mu_;
        for (std::size_t i = begin; i < begin + mu_; ++i)
            cnt += x[i];
        const std::size_t before = majority(cnt);
        const std::size_t after = majority(x[flip] ? cnt - 1 : cnt + 1);
        const std::size_t raw =
            table_.empty() ? static_cast<std::size_t>(fx) : inverse_[static_cast<std::size_t>(fx)];
        return remap(raw + after - before);
    }

    std::string id() const override {
        std::string s = "wmodel_n" + std::to_string(n_) + "_m" + std::to_string(m_) + "_mu" +
                        std::to_string(mu_);
        if (!table_.empty())
            s += "_rug";
        return s;
    }

    const std::vector<std::size_t>& ruggedness_table() const { return table_; }

private:
    std::size_t majority(std::size_t ones_in_block) const {
        return 2 * ones_in_block > mu_ ? 1 : 0; // tie -> 0
    }

    std::size_t block_bit(const BitVec& x, std::size_t b) const {
        std::size_t cnt = 0;
        const std::size_t begin = b * mu_;
        for (std::size_t i = begin; i < begin + mu_; ++i)
            cnt += x[i];
        return majority(cnt);
    }

    double remap(std::size_t k) const {
        return static_cast<double>(table_.empty() ? k : table_[k]);
    }

    std::size_t n_, m_, mu_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
};

} // namespace metaforge::problems
