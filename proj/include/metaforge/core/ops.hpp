#pragma once

#include "metaforge/core/evaluation.hpp"
#include "metaforge/core/rng.hpp"
#include "metaforge/core/solution.hpp"

namespace metaforge {

/// Generates one solution, typically at random; used out of the loop.
template <class S>
class Init {
public:
    virtual ~Init() = default;
    virtual S operator()(RngStream& rng) = 0;
};

/// Picks a single member of a population. The returned reference aliases
/// the population (selection closure is by identity, not value).
template <class S>
class SelectOne {
public:
    virtual ~SelectOne() = default;
    virtual const S& operator()(const Population<S>& pop, RngStream& rng) = 0;
};

/// Alters one solution in place. Returns true iff the genotype actually
/// changed; a true return implies the solution was invalidated, a false
/// return implies the genotype is bitwise unchanged.
template <class S>
class Mutation {
public:
    virtual ~Mutation() = default;
    virtual bool operator()(S& s, RngStream& rng) = 0;
};

/// Alters two solutions in place at once; same changed/invalidated contract
/// as Mutation, applied to both arguments.
template <class S>
class Crossover {
public:
    virtual ~Crossover() = default;
    virtual bool operator()(S& a, S& b, RngStream& rng) = 0;
};

/// Merges parents and offspring into the next population of exactly
/// |parents| members.
template <class S>
class Replacement {
public:
    virtual ~Replacement() = default;
    virtual Population<S> operator()(const Population<S>& parents,
                                     const Population<S>& offspring) = 0;
};

/// Transforms an offspring pool in place (crossover/mutation stages).
template <class S>
class Variation {
public:
    virtual ~Variation() = default;
    virtual bool operator()(Population<S>& pool, RngStream& rng) = 0;
};

/// Produces an offspring population from the current one. This is the stage
/// EDO replaces with explicit model estimation and sampling.
template <class S>
class Breeder {
public:
    virtual ~Breeder() = default;
    virtual Population<S> operator()(const Population<S>& pop, RngStream& rng) = 0;
};

/// Returns false iff the algorithm's iteration loop is to be stopped.
/// Checked once per iteration, after replacement.
template <class S>
class Continuator {
public:
    virtual ~Continuator() = default;
    virtual bool operator()(const Population<S>& pop) = 0;
};

/// Observes the population once per checkpoint call (e.g. statistics).
template <class S>
class Monitor {
public:
    virtual ~Monitor() = default;
    virtual void operator()(const Population<S>& pop,
                            const EvalProgress<fitness_t<S>>& progress) = 0;
};

/// Uniform random bit-vector initializer.
template <class S>
class RandomBitInit : public Init<S> {
public:
    explicit RandomBitInit(std::size_t n) : n_(n) {}

    S operator()(RngStream& rng) override { return S(random_bitvec(n_, rng)); }

private:
    std::size_t n_;
};

} // namespace metaforge
