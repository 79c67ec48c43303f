#pragma once

#include "revarith/gates.hpp"

#include <string>
#include <vector>

namespace revarith {

/// Input role of a line: a named primary input, or an ancilla constant.
/// The generators only ever feed constant 0; constant 1 is representable.
struct LineInput {
    bool is_constant = false;
    int value = 0;     ///< used when is_constant
    std::string name;  ///< used otherwise

    static LineInput primary(std::string input_name) {
        return {false, 0, std::move(input_name)};
    }
    static LineInput constant(int bit) { return {true, bit, {}}; }
    bool operator==(const LineInput&) const = default;
};

/// Output role of a line: a named primary output, or garbage kept only to
/// preserve the bijection.
struct LineOutput {
    bool is_garbage = true;
    std::string name;  ///< used when !is_garbage

    static LineOutput garbage() { return {true, {}}; }
    static LineOutput primary(std::string output_name) {
        return {false, std::move(output_name)};
    }
    bool operator==(const LineOutput&) const = default;
};

struct Line {
    LineInput input;
    LineOutput output;
    bool operator==(const Line&) const = default;
};

/// One gate application. lines[k] plays the k-th role (A, B, C) of the
/// catalog mapping; indices must be pairwise distinct.
struct GateInstance {
    GateKind kind;
    std::vector<int> lines;
    bool operator==(const GateInstance&) const = default;
};

/// The four comparison metrics of a circuit.
struct Metrics {
    int gate_count = 0;
    int garbage_inputs = 0;   ///< constant lines
    int garbage_outputs = 0;  ///< garbage lines
    int quantum_cost = 0;     ///< sum of catalog costs
    bool operator==(const Metrics&) const = default;
};

Metrics operator+(const Metrics& lhs, const Metrics& rhs);
Metrics operator*(int k, const Metrics& m);

/// A reversible netlist: ordered lines with input/output roles and a gate
/// sequence in execution order. Lines never fan out; a value is reused only
/// by running further gates on its line.
struct Circuit {
    std::string name;
    std::vector<Line> lines;
    std::vector<GateInstance> gates;

    /// Appends a primary-input line (garbage on the output side until marked).
    int add_input(std::string input_name);
    /// Appends a constant ancilla line.
    int add_constant(int bit);
    /// Marks a line as the named primary output.
    void set_output(int line, std::string output_name);
    void add_gate(GateKind kind, std::vector<int> gate_lines);

    std::vector<int> primary_input_lines() const;
    std::vector<int> primary_output_lines() const;
    bool operator==(const Circuit&) const = default;
};

/// Structural checks: identifier validity, name uniqueness per side, gate
/// index ranges, arity match and distinctness. Returns one message per
/// violation; an empty result guarantees the circuit is simulatable.
std::vector<std::string> validate(const Circuit& circuit);

/// True when a name is usable as a netlist identifier.
bool valid_identifier(std::string_view name);

/// Gate count, constant inputs, garbage outputs and summed catalog quantum
/// cost. Throws std::invalid_argument when validate() reports violations.
Metrics compute_metrics(const Circuit& circuit);

}  // namespace revarith
