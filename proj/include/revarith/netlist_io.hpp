#pragma once

#include "revarith/netlist.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace revarith {

/// Parse failure; `line` is the 1-based source line of the offending token.
struct NetlistParseError : std::runtime_error {
    int line;
    NetlistParseError(int line_number, const std::string& message)
        : std::runtime_error(message + " at line " + std::to_string(line_number)),
          line(line_number) {}
};

/// Canonical textual form of a circuit: fixed section order, single-space
/// separators, newline terminated. Deterministic, so re-serialization of a
/// parsed file is byte-identical. Throws std::invalid_argument on an
/// invalid circuit.
std::string serialize(const Circuit& circuit);

/// Parses the textual netlist format. '#' starts a comment; blank lines are
/// ignored. Throws NetlistParseError with the offending line and token.
Circuit parse_netlist(std::string_view text);

Circuit load_netlist(const std::string& path);
void save_netlist(const std::string& path, const Circuit& circuit);

}  // namespace revarith
