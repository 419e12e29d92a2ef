#pragma once

#include <cctype>
#include <ostream>
#include <string>

#include "metaforge/core/parameter.hpp"
#include "metaforge/foundry/slots.hpp"

namespace metaforge::foundry {

/// irace parameter names must be alphanumeric: "mutation-rate" becomes
/// "mutationrate".
inline std::string irace_name(const std::string& flag_name) {
    std::string out;
    for (char c : flag_name)
        if (std::isalnum(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

inline void print_irace_header(std::ostream& out) { out << "# name\t switch\t type\t range\n"; }

/// One irace parameter-file line for a slot-bound parameter. Operator slots
/// are categorical over their indices; value slots are an integer index
/// range.
inline void print_irace(const Parameter& param, const SlotBase& slot, std::ostream& out) {
    if (slot.size() == 0)
        throw FoundryError("slot '" + slot.name() + "': cannot print an empty slot");
    out << irace_name(param.name) << " \"--" << param.name << "=\" ";
    if (slot.categorical()) {
        out << "c (";
        for (std::size_t i = 0; i < slot.size(); ++i)
            out << (i ? "," : "") << i;
        out << ")";
    } else {
        out << "i (0," << slot.size() - 1 << ")";
    }
    out << "\n";
}

/// One line for a real-valued parameter over a numeric range.
inline void print_irace(const Parameter& param, double lo, double hi, std::ostream& out) {
    out << irace_name(param.name) << " \"--" << param.name << "=\" r (" << lo << "," << hi
        << ")\n";
}

} // namespace metaforge::foundry
