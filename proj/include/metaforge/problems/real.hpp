#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "metaforge/core/encoding.hpp"
#include "metaforge/core/fitness.hpp"

namespace metaforge::problems {

/// Per-coordinate box bounds, lower < upper in every coordinate.
struct RealBounds {
    RealVec lower;
    RealVec upper;

    RealBounds(RealVec lo, RealVec hi) : lower(std::move(lo)), upper(std::move(hi)) {
        if (lower.size() != upper.size())
            throw std::invalid_argument("RealBounds: dimension mismatch");
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (!(lower[i] < upper[i]))
                throw std::invalid_argument("RealBounds: lower must be < upper per coordinate");
    }

    static RealBounds cube(std::size_t n, double lo, double hi) {
        return RealBounds(RealVec(n, lo), RealVec(n, hi));
    }

    std::size_t dimension() const { return lower.size(); }
};

/// Benchmark objective over real vectors (minimized).
class RealProblem {
public:
    virtual ~RealProblem() = default;

    virtual double evaluate(const RealVec& x) const = 0;
    virtual std::size_t dimension() const = 0;
    Direction direction() const { return Direction::minimize; }
    Better<double> better() const { return Better<double>{direction()}; }

    virtual const RealBounds& bounds() const = 0;

    virtual double fitness_lower_bound() const = 0;
    virtual double fitness_upper_bound() const = 0;

    virtual std::string id() const = 0;

    std::function<double(const RealVec&)> objective() const {
        return [this](const RealVec& x) { return evaluate(x); };
    }
};

class Sphere : public RealProblem {
public:
    explicit Sphere(std::size_t n, double lo = -5.12, double hi = 5.12)
        : bounds_(RealBounds::cube(n, lo, hi)) {}

    double evaluate(const RealVec& x) const override {
        double s = 0.0;
        for (double v : x)
            s += v * v;
        return s;
    }

    std::size_t dimension() const override { return bounds_.dimension(); }
    const RealBounds& bounds() const override { return bounds_; }

    double fitness_lower_bound() const override { return 0.0; }
    double fitness_upper_bound() const override {
        double s = 0.0;
        for (std::size_t i = 0; i < dimension(); ++i)
            s += std::max(bounds_.lower[i] * bounds_.lower[i], bounds_.upper[i] * bounds_.upper[i]);
        return s;
    }

    std::string id() const override { return "sphere_n" + std::to_string(dimension()); }

private:
    RealBounds bounds_;
};

class Rastrigin : public RealProblem {
public:
    explicit Rastrigin(std::size_t n, double lo = -5.12, double hi = 5.12)
        : bounds_(RealBounds::cube(n, lo, hi)) {}

    double evaluate(const RealVec& x) const override {
        double s = 10.0 * static_cast<double>(x.size());
        for (double v : x)
            s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
        return s;
    }

    std::size_t dimension() const override { return bounds_.dimension(); }
    const RealBounds& bounds() const override { return bounds_; }

    double fitness_lower_bound() const override { return 0.0; }
    double fitness_upper_bound() const override {
        // x^2 - 10 cos(2 pi x) <= x^2 + 10 per coordinate
        double s = 10.0 * static_cast<double>(dimension());
        for (std::size_t i = 0; i < dimension(); ++i)
            s += std::max(bounds_.lower[i] * bounds_.lower[i],
                          bounds_.upper[i] * bounds_.upper[i]) +
                 10.0;
        return s;
    }

    std::string id() const override { return "rastrigin_n" + std::to_string(dimension()); }

private:
    RealBounds bounds_;
};

} // namespace metaforge::problems
