#include "revarith/simulate.hpp"

#include <algorithm>
#include <stdexcept>

namespace revarith {

void run_gates_inplace(const Circuit& circuit, std::vector<std::uint8_t>& state) {
    for (const auto& gate : circuit.gates) {
        unsigned x = 0;
        const int arity = static_cast<int>(gate.lines.size());
        for (int k = 0; k < arity; ++k) {
            x |= static_cast<unsigned>(state[static_cast<std::size_t>(gate.lines[k])]) << k;
        }
        const unsigned y = apply_gate_packed(gate.kind, x);
        for (int k = 0; k < arity; ++k) {
            state[static_cast<std::size_t>(gate.lines[k])] =
                static_cast<std::uint8_t>((y >> k) & 1u);
        }
    }
}

std::vector<int> evaluate_packed(const Circuit& circuit, std::uint64_t inputs) {
    std::vector<std::uint8_t> state(circuit.lines.size(), 0);
    int slot = 0;
    for (std::size_t i = 0; i < circuit.lines.size(); ++i) {
        const auto& input = circuit.lines[i].input;
        if (input.is_constant) {
            state[i] = static_cast<std::uint8_t>(input.value);
        } else {
            state[i] = static_cast<std::uint8_t>((inputs >> slot) & 1u);
            ++slot;
        }
    }
    run_gates_inplace(circuit, state);
    return std::vector<int>(state.begin(), state.end());
}

std::vector<int> evaluate(const Circuit& circuit, const Assignment& assignment) {
    if (const auto violations = validate(circuit); !violations.empty()) {
        throw std::invalid_argument("invalid circuit: " + violations.front());
    }
    std::size_t used = 0;
    std::uint64_t packed = 0;
    int slot = 0;
    for (const auto& line : circuit.lines) {
        if (line.input.is_constant) {
            continue;
        }
        const auto it = assignment.find(line.input.name);
        if (it == assignment.end()) {
            throw std::invalid_argument("missing assignment for input " + line.input.name);
        }
        if (it->second != 0 && it->second != 1) {
            throw std::invalid_argument("assignment for " + line.input.name +
                                        " must be 0 or 1");
        }
        if (slot >= 64) {
            throw std::length_error("evaluate supports at most 64 primary inputs");
        }
        packed |= static_cast<std::uint64_t>(it->second) << slot;
        ++slot;
        ++used;
    }
    if (used != assignment.size()) {
        for (const auto& [key, value] : assignment) {
            (void)value;
            const bool known = std::any_of(
                circuit.lines.begin(), circuit.lines.end(), [&](const Line& line) {
                    return !line.input.is_constant && line.input.name == key;
                });
            if (!known) {
                throw std::invalid_argument("assignment names unknown input " + key);
            }
        }
    }
    return evaluate_packed(circuit, packed);
}

std::map<std::string, int> primary_output_values(const Circuit& circuit,
                                                 const std::vector<int>& line_values) {
    std::map<std::string, int> result;
    for (std::size_t i = 0; i < circuit.lines.size(); ++i) {
        const auto& output = circuit.lines[i].output;
        if (!output.is_garbage) {
            result[output.name] = line_values[i];
        }
    }
    return result;
}

TruthTable truth_table(const Circuit& circuit) {
    if (const auto violations = validate(circuit); !violations.empty()) {
        throw std::invalid_argument("invalid circuit: " + violations.front());
    }
    const auto inputs = circuit.primary_input_lines();
    if (static_cast<int>(inputs.size()) > kMaxTruthTableInputs) {
        throw std::length_error("truth_table supports at most " +
                                std::to_string(kMaxTruthTableInputs) + " primary inputs, got " +
                                std::to_string(inputs.size()));
    }

    TruthTable table;
    for (const int idx : inputs) {
        table.input_names.push_back(circuit.lines[static_cast<std::size_t>(idx)].input.name);
    }
    std::vector<int> columns;  // line index per output column
    for (std::size_t i = 0; i < circuit.lines.size(); ++i) {
        if (!circuit.lines[i].output.is_garbage) {
            table.output_names.push_back(circuit.lines[i].output.name);
            columns.push_back(static_cast<int>(i));
        }
    }
    int garbage_counter = 0;
    for (std::size_t i = 0; i < circuit.lines.size(); ++i) {
        if (circuit.lines[i].output.is_garbage) {
            table.output_names.push_back("g" + std::to_string(++garbage_counter));
            columns.push_back(static_cast<int>(i));
        }
    }

    const std::uint64_t row_count = std::uint64_t{1} << inputs.size();
    table.rows.reserve(row_count);
    for (std::uint64_t x = 0; x < row_count; ++x) {
        const auto values = evaluate_packed(circuit, x);
        std::vector<int> row;
        row.reserve(columns.size());
        for (const int col : columns) {
            row.push_back(values[static_cast<std::size_t>(col)]);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Permutation line_permutation(const Circuit& circuit) {
    if (const auto violations = validate(circuit); !violations.empty()) {
        throw std::invalid_argument("invalid circuit: " + violations.front());
    }
    const int n = static_cast<int>(circuit.lines.size());
    if (n > kMaxPermutationLines) {
        throw std::length_error("line_permutation supports at most " +
                                std::to_string(kMaxPermutationLines) + " lines, got " +
                                std::to_string(n));
    }
    Permutation perm;
    perm.table.resize(std::size_t{1} << n);
    std::vector<std::uint8_t> state(static_cast<std::size_t>(n));
    for (std::uint64_t x = 0; x < perm.table.size(); ++x) {
        for (int k = 0; k < n; ++k) {
            state[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((x >> k) & 1u);
        }
        run_gates_inplace(circuit, state);
        std::uint32_t y = 0;
        for (int k = 0; k < n; ++k) {
            y |= static_cast<std::uint32_t>(state[static_cast<std::size_t>(k)]) << k;
        }
        perm.table[x] = y;
    }
    return perm;
}

bool equivalent(const Circuit& lhs, const Circuit& rhs) {
    auto names_of = [](const Circuit& c, bool inputs) {
        std::vector<std::string> names;
        for (const auto& line : c.lines) {
            if (inputs && !line.input.is_constant) {
                names.push_back(line.input.name);
            }
            if (!inputs && !line.output.is_garbage) {
                names.push_back(line.output.name);
            }
        }
        std::sort(names.begin(), names.end());
        return names;
    };
    auto report_mismatch = [](const char* side, const std::vector<std::string>& a,
                              const std::vector<std::string>& b) {
        std::string message = std::string("primary ") + side + " names differ:";
        std::vector<std::string> only_a, only_b;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
        for (const auto& n : only_a) message += " -" + n;
        for (const auto& n : only_b) message += " +" + n;
        throw std::invalid_argument(message);
    };

    const auto in_l = names_of(lhs, true), in_r = names_of(rhs, true);
    if (in_l != in_r) report_mismatch("input", in_l, in_r);
    const auto out_l = names_of(lhs, false), out_r = names_of(rhs, false);
    if (out_l != out_r) report_mismatch("output", out_l, out_r);

    if (static_cast<int>(in_l.size()) > kMaxTruthTableInputs) {
        throw std::length_error("equivalent supports at most " +
                                std::to_string(kMaxTruthTableInputs) + " primary inputs");
    }

    // Enumerate assignments over the sorted name list so both circuits see
    // the same input vector regardless of line order.
    const std::uint64_t count = std::uint64_t{1} << in_l.size();
    for (std::uint64_t x = 0; x < count; ++x) {
        Assignment assignment;
        for (std::size_t k = 0; k < in_l.size(); ++k) {
            assignment[in_l[k]] = static_cast<int>((x >> k) & 1u);
        }
        const auto a = primary_output_values(lhs, evaluate(lhs, assignment));
        const auto b = primary_output_values(rhs, evaluate(rhs, assignment));
        if (a != b) {
            return false;
        }
    }
    return true;
}

AddSubResult addsub_oracle(int width, Mode mode, std::uint64_t a, std::uint64_t b) {
    if (width < 1 || width > 64) {
        throw std::invalid_argument("width must be in [1, 64], got " + std::to_string(width));
    }
    const std::uint64_t mask =
        width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    if (a > mask || b > mask) {
        throw std::invalid_argument("operands must be < 2^width");
    }
    if (mode == Mode::Add) {
        const std::uint64_t sum = (a + b) & mask;
        const int carry = (a > mask - b) ? 1 : 0;
        return {sum, carry};
    }
    const std::uint64_t diff = (a - b) & mask;
    const int borrow = (a < b) ? 1 : 0;
    return {diff, borrow};
}

}  // namespace revarith
