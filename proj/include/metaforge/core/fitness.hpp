#pragma once

namespace metaforge {

/// Optimization direction of a problem. Operators never branch on this
/// directly; they compare through a Better relation built from it.
enum class Direction { minimize, maximize };

inline const char* to_string(Direction d) {
    return d == Direction::minimize ? "minimize" : "maximize";
}

/// Strict "a is better than b" relation for scalar fitness.
template <class F = double>
struct Better {
    Direction direction = Direction::maximize;

    bool operator()(const F& a, const F& b) const {
        return direction == Direction::maximize ? b < a : a < b;
    }
};

} // namespace metaforge
