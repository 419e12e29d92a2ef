#pragma once

#include <optional>
#include <string>
#include <vector>

namespace metaforge {

enum class ParamKind { integer, real, categorical, boolean };

inline const char* to_string(ParamKind k) {
    switch (k) {
    case ParamKind::integer: return "integer";
    case ParamKind::real: return "real";
    case ParamKind::categorical: return "categorical";
    case ParamKind::boolean: return "boolean";
    }
    return "?";
}

/// Declared command-line parameter: the abstraction shared by the CLI
/// parser and the irace interface printer.
struct Parameter {
    std::string name;                      // long flag, unique within a parser
    std::optional<char> flag{};            // optional short flag
    ParamKind kind = ParamKind::integer;
    std::string default_value{};
    std::string section{};                 // help grouping
    bool required = false;
    std::vector<std::string> categories{}; // finite value list for categorical
    std::string help{};
};

} // namespace metaforge
