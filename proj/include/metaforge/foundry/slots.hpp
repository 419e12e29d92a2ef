#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace metaforge::foundry {

class FoundryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One encoded dimension of an algorithm design space: a named, ordered
/// list of alternatives. Alternatives are append-only during setup;
/// positions and indices are stable after freezing.
class SlotBase {
public:
    explicit SlotBase(std::string name) : name_(std::move(name)) {}
    virtual ~SlotBase() = default;

    const std::string& name() const { return name_; }

    /// Position of this slot within its foundry's encoding.
    std::size_t index() const {
        if (position_ == npos)
            throw FoundryError("slot '" + name_ + "' is not registered with a foundry");
        return position_;
    }

    virtual std::size_t size() const = 0;

    /// Operator slots are categorical alternatives; value slots are ordered
    /// numeric levels. Drives the irace type code.
    virtual bool categorical() const = 0;

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    void attach(std::size_t position) { position_ = position; }

protected:
    void require_setup() const {
        if (frozen_)
            throw FoundryError("slot '" + name_ + "': add after freeze");
    }

    void check_index(std::size_t i) const {
        if (i >= size())
            throw FoundryError("slot '" + name_ + "': index " + std::to_string(i) +
                               " out of range [0, " + std::to_string(size()) + ")");
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::string name_;
    std::size_t position_ = npos;
    bool frozen_ = false;
};

/// Slot whose alternatives are operator factories: a constructor with a
/// frozen parameter tuple each. Instances are constructed on first use and
/// cached per index afterwards.
template <class Interface>
class OperatorSlot : public SlotBase {
public:
    using Factory = std::function<std::unique_ptr<Interface>()>;

    using SlotBase::SlotBase;

    template <class Concrete, class... Args>
    void add(Args... args) {
        add_factory([args...]() { return std::make_unique<Concrete>(args...); });
    }

    void add_factory(Factory f) {
        require_setup();
        factories_.push_back(std::move(f));
    }

    std::size_t size() const override { return factories_.size(); }
    bool categorical() const override { return true; }

    Interface& get(std::size_t i) {
        check_index(i);
        if (cache_.size() < factories_.size())
            cache_.resize(factories_.size());
        if (!cache_[i])
            cache_[i] = factories_[i]();
        return *cache_[i];
    }

private:
    std::vector<Factory> factories_;
    std::vector<std::unique_ptr<Interface>> cache_;
};

/// Slot whose alternatives are frozen constants (rates, sizes, ...), so
/// numeric parameters share the one integer encoding with operators.
template <class T>
class ValueSlot : public SlotBase {
public:
    using SlotBase::SlotBase;

    void add(T value) {
        require_setup();
        values_.push_back(std::move(value));
    }

    std::size_t size() const override { return values_.size(); }
    bool categorical() const override { return false; }

    const T& get(std::size_t i) const {
        check_index(i);
        return values_[i];
    }

private:
    std::vector<T> values_;
};

/// A point in the design space: one alternative index per slot, in slot
/// order.
using EncodedAlgorithm = std::vector<std::size_t>;

/// Ordered slot list of a foundry; owns positions and encoding validation.
class SlotRegistry {
public:
    void register_slot(SlotBase& slot) {
        slot.attach(slots_.size());
        slots_.push_back(&slot);
    }

    const std::vector<SlotBase*>& slots() const { return slots_; }
    std::size_t size() const { return slots_.size(); }

    void freeze_all() {
        for (auto* s : slots_)
            s->freeze();
    }

    /// Product of slot cardinalities; an empty slot yields 0.
    unsigned long long design_space_size() const {
        unsigned long long total = 1;
        for (const auto* s : slots_)
            total *= static_cast<unsigned long long>(s->size());
        return total;
    }

    /// Fail fast on malformed encodings, naming the offending slot.
    void validate(const EncodedAlgorithm& encoding) const {
        if (encoding.size() != slots_.size())
            throw FoundryError("encoding length " + std::to_string(encoding.size()) +
                               ", expected " + std::to_string(slots_.size()));
        for (const auto* s : slots_) {
            if (encoding[s->index()] >= s->size())
                throw FoundryError("slot '" + s->name() + "': index " +
                                   std::to_string(encoding[s->index()]) + " out of range [0, " +
                                   std::to_string(s->size()) + ")");
        }
    }

private:
    std::vector<SlotBase*> slots_;
};

} // namespace metaforge::foundry
