#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "metaforge/problems/bit.hpp"
#include "metaforge/problems/real.hpp"

namespace metaforge::problems {

/// Result of parsing a problem selection string; exactly one pointer is set.
struct ParsedProblem {
    std::unique_ptr<BitProblem> bit;
    std::unique_ptr<RealProblem> real;

    bool is_bit() const { return bit != nullptr; }
};

namespace detail {

inline std::map<std::string, std::string> parse_kv(const std::string& text,
                                                   const std::string& context) {
    std::map<std::string, std::string> kv;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument(context + ": expected key=value, got '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
        pos = comma + 1;
    }
    return kv;
}

inline std::size_t require_size(const std::map<std::string, std::string>& kv,
                                const std::string& key, const std::string& context) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw std::invalid_argument(context + ": missing parameter '" + key + "'");
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(it->second, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != it->second.size() || it->second.empty())
        throw std::invalid_argument(context + ": parameter '" + key + "' must be a positive integer");
    return static_cast<std::size_t>(v);
}

} // namespace detail

/// Parse a problem selection string:
///   "onemax:n=100", "leadingones:n=64",
///   "wmodel:n=100,m=80,mu=2,rug=adjswap" (m defaults to n, mu to 1,
///   rug to none; rug is "adjswap" or "none"),
///   "sphere:n=10", "rastrigin:n=10".
inline ParsedProblem parse_problem(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    const std::string context = "problem '" + name + "'";
    const auto kv = detail::parse_kv(rest, context);

    ParsedProblem out;
    if (name == "onemax") {
        out.bit = std::make_unique<OneMax>(detail::require_size(kv, "n", context));
    } else if (name == "leadingones") {
        out.bit = std::make_unique<LeadingOnes>(detail::require_size(kv, "n", context));
    } else if (name == "wmodel") {
        const std::size_t n = detail::require_size(kv, "n", context);
        const std::size_t m = kv.count("m") ? detail::require_size(kv, "m", context) : n;
        const std::size_t mu = kv.count("mu") ? detail::require_size(kv, "mu", context) : 1;
        std::string rug = kv.count("rug") ? kv.at("rug") : "none";
        if (rug == "adjswap")
            out.bit = std::make_unique<WModel>(WModel::with_adjacent_swaps(n, m, mu));
        else if (rug == "none")
            out.bit = std::make_unique<WModel>(n, m, mu);
        else
            throw std::invalid_argument(context + ": unknown ruggedness '" + rug + "'");
    } else if (name == "sphere") {
        out.real = std::make_unique<Sphere>(detail::require_size(kv, "n", context));
    } else if (name == "rastrigin") {
        out.real = std::make_unique<Rastrigin>(detail::require_size(kv, "n", context));
    } else {
        throw std::invalid_argument("unknown problem '" + name + "'");
    }
    return out;
}

} // namespace metaforge::problems
