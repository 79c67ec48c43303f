#include "revarith/netlist.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace revarith {

Metrics operator+(const Metrics& lhs, const Metrics& rhs) {
    return {lhs.gate_count + rhs.gate_count,
            lhs.garbage_inputs + rhs.garbage_inputs,
            lhs.garbage_outputs + rhs.garbage_outputs,
            lhs.quantum_cost + rhs.quantum_cost};
}

Metrics operator*(int k, const Metrics& m) {
    return {k * m.gate_count, k * m.garbage_inputs, k * m.garbage_outputs,
            k * m.quantum_cost};
}

int Circuit::add_input(std::string input_name) {
    lines.push_back({LineInput::primary(std::move(input_name)), LineOutput::garbage()});
    return static_cast<int>(lines.size()) - 1;
}

int Circuit::add_constant(int bit) {
    lines.push_back({LineInput::constant(bit), LineOutput::garbage()});
    return static_cast<int>(lines.size()) - 1;
}

void Circuit::set_output(int line, std::string output_name) {
    lines.at(static_cast<std::size_t>(line)).output =
        LineOutput::primary(std::move(output_name));
}

void Circuit::add_gate(GateKind kind, std::vector<int> gate_lines) {
    gates.push_back({kind, std::move(gate_lines)});
}

std::vector<int> Circuit::primary_input_lines() const {
    std::vector<int> result;
    for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
        if (!lines[static_cast<std::size_t>(i)].input.is_constant) {
            result.push_back(i);
        }
    }
    return result;
}

std::vector<int> Circuit::primary_output_lines() const {
    std::vector<int> result;
    for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
        if (!lines[static_cast<std::size_t>(i)].output.is_garbage) {
            result.push_back(i);
        }
    }
    return result;
}

bool valid_identifier(std::string_view name) {
    if (name.empty()) {
        return false;
    }
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') {
        return false;
    }
    for (const char ch : name) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
            return false;
        }
    }
    return true;
}

std::vector<std::string> validate(const Circuit& circuit) {
    std::vector<std::string> violations;
    const int line_count = static_cast<int>(circuit.lines.size());

    if (!circuit.name.empty() && !valid_identifier(circuit.name)) {
        violations.push_back("circuit name '" + circuit.name +
                             "' is not a valid identifier");
    }

    std::set<std::string> input_names;
    std::set<std::string> output_names;
    for (int i = 0; i < line_count; ++i) {
        const auto& line = circuit.lines[static_cast<std::size_t>(i)];
        if (line.input.is_constant) {
            if (line.input.value != 0 && line.input.value != 1) {
                violations.push_back("constant on line " + std::to_string(i) +
                                     " must be 0 or 1");
            }
        } else {
            if (!valid_identifier(line.input.name)) {
                violations.push_back("invalid input name on line " + std::to_string(i));
            } else if (!input_names.insert(line.input.name).second) {
                violations.push_back("duplicate input name " + line.input.name);
            }
        }
        if (!line.output.is_garbage) {
            if (!valid_identifier(line.output.name)) {
                violations.push_back("invalid output name on line " + std::to_string(i));
            } else if (!output_names.insert(line.output.name).second) {
                violations.push_back("duplicate output name " + line.output.name);
            }
        }
    }

    for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
        const auto& gate = circuit.gates[g];
        const auto& spec = gate_spec(gate.kind);
        const std::string where = "gate " + std::to_string(g);
        if (static_cast<int>(gate.lines.size()) != spec.arity) {
            violations.push_back(where + " (" + std::string(spec.mnemonic) +
                                 ") expects " + std::to_string(spec.arity) +
                                 " lines, got " + std::to_string(gate.lines.size()));
            continue;
        }
        bool indices_ok = true;
        for (const int idx : gate.lines) {
            if (idx < 0 || idx >= line_count) {
                violations.push_back("line index " + std::to_string(idx) +
                                     " out of range in " + where);
                indices_ok = false;
            }
        }
        if (indices_ok) {
            std::set<int> distinct(gate.lines.begin(), gate.lines.end());
            if (distinct.size() != gate.lines.size()) {
                violations.push_back("duplicate line in " + where);
            }
        }
    }
    return violations;
}

Metrics compute_metrics(const Circuit& circuit) {
    const auto violations = validate(circuit);
    if (!violations.empty()) {
        throw std::invalid_argument("invalid circuit: " + violations.front());
    }
    Metrics metrics;
    metrics.gate_count = static_cast<int>(circuit.gates.size());
    for (const auto& line : circuit.lines) {
        if (line.input.is_constant) {
            ++metrics.garbage_inputs;
        }
        if (line.output.is_garbage) {
            ++metrics.garbage_outputs;
        }
    }
    for (const auto& gate : circuit.gates) {
        metrics.quantum_cost += gate_spec(gate.kind).quantum_cost;
    }
    return metrics;
}

}  // namespace revarith
