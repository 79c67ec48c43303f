#include "revarith/designs.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace revarith {

namespace {

/// A unit wiring on local line numbers. Halves use A=0, B=1, ctrl=2 and
/// constants from 3 up; fulls use A=0, B=1, Cin=2, ctrl=3 and constants
/// from 4 up. Gate operands are in catalog role order (A, B, C).
struct UnitTemplate {
    int const_count;
    std::vector<GateInstance> gates;
    int sum_line;
    int carry_line;
};

const UnitTemplate& unit_template(DesignId d, UnitKind kind) {
    using K = GateKind;
    // Halves. D1 copies B, splits A'B/AB with a Fredkin, then selects the
    // carry with a second Fredkin on ctrl. D2 and D3 flip A by ctrl first,
    // form the product on the ancilla (TR gives B&~a*, Peres gives a*&B),
    // and restore the sum with a final ctrl Feynman.
    static const UnitTemplate d1_half{
        2,
        {{K::FG, {1, 3}}, {K::FREDKIN, {0, 1, 4}}, {K::FG, {0, 3}}, {K::FREDKIN, {2, 4, 1}}},
        3,
        1};
    static const UnitTemplate d2_half{
        1, {{K::FG, {2, 0}}, {K::TR, {1, 0, 3}}, {K::FG, {2, 0}}}, 0, 3};
    static const UnitTemplate d3_half{
        1, {{K::FG, {2, 0}}, {K::PERES, {0, 1, 3}}, {K::FG, {2, 1}}}, 1, 3};
    // Fulls. Same cores extended by the Cin term; D1 additionally taps ctrl
    // onto a spare ancilla with its final Feynman.
    static const UnitTemplate d1_full{3,
                                      {{K::FG, {1, 4}},
                                       {K::FREDKIN, {0, 1, 5}},
                                       {K::FG, {0, 4}},
                                       {K::FREDKIN, {3, 1, 5}},
                                       {K::FG, {3, 4}},
                                       {K::TR, {2, 4, 1}},
                                       {K::FG, {3, 4}},
                                       {K::FG, {3, 6}}},
                                      4,
                                      1};
    static const UnitTemplate d2_full{
        1,
        {{K::FG, {3, 0}}, {K::TR, {1, 0, 4}}, {K::TR, {2, 0, 4}}, {K::FG, {3, 0}}},
        0,
        4};
    static const UnitTemplate d3_full{
        1,
        {{K::FG, {3, 0}}, {K::PERES, {0, 1, 4}}, {K::PERES, {1, 2, 4}}, {K::FG, {3, 2}}},
        2,
        4};

    if (kind == UnitKind::Half) {
        switch (d) {
            case DesignId::D1: return d1_half;
            case DesignId::D2: return d2_half;
            case DesignId::D3: return d3_half;
        }
    } else {
        switch (d) {
            case DesignId::D1: return d1_full;
            case DesignId::D2: return d2_full;
            case DesignId::D3: return d3_full;
        }
    }
    throw std::invalid_argument("unknown design");
}

std::string design_prefix(DesignId d) { return "d" + std::to_string(design_number(d)); }

/// Instantiates a template into `circuit` through a local->global line map.
void emit_unit(Circuit& circuit, const UnitTemplate& unit, const std::vector<int>& line_map) {
    for (const auto& gate : unit.gates) {
        std::vector<int> lines;
        lines.reserve(gate.lines.size());
        for (const int local : gate.lines) {
            lines.push_back(line_map[static_cast<std::size_t>(local)]);
        }
        circuit.add_gate(gate.kind, std::move(lines));
    }
}

}  // namespace

int design_number(DesignId d) { return static_cast<int>(d); }

std::optional<DesignId> design_from_number(int number) {
    switch (number) {
        case 1: return DesignId::D1;
        case 2: return DesignId::D2;
        case 3: return DesignId::D3;
        default: return std::nullopt;
    }
}

std::map<Mode, int> mode_to_ctrl(DesignId d) {
    if (d == DesignId::D3) {
        return {{Mode::Add, 0}, {Mode::Sub, 1}};
    }
    return {{Mode::Add, 1}, {Mode::Sub, 0}};
}

Circuit build_half(DesignId d) {
    const UnitTemplate& unit = unit_template(d, UnitKind::Half);
    Circuit circuit;
    circuit.name = design_prefix(d) + "_half";
    std::vector<int> line_map;
    line_map.push_back(circuit.add_input("A"));
    line_map.push_back(circuit.add_input("B"));
    line_map.push_back(circuit.add_input("ctrl"));
    for (int k = 0; k < unit.const_count; ++k) {
        line_map.push_back(circuit.add_constant(0));
    }
    emit_unit(circuit, unit, line_map);
    circuit.set_output(line_map[static_cast<std::size_t>(unit.sum_line)], "S_D");
    circuit.set_output(line_map[static_cast<std::size_t>(unit.carry_line)], "C_B");
    return circuit;
}

Circuit build_full(DesignId d) {
    const UnitTemplate& unit = unit_template(d, UnitKind::Full);
    Circuit circuit;
    circuit.name = design_prefix(d) + "_full";
    std::vector<int> line_map;
    line_map.push_back(circuit.add_input("A"));
    line_map.push_back(circuit.add_input("B"));
    line_map.push_back(circuit.add_input("Cin"));
    line_map.push_back(circuit.add_input("ctrl"));
    for (int k = 0; k < unit.const_count; ++k) {
        line_map.push_back(circuit.add_constant(0));
    }
    emit_unit(circuit, unit, line_map);
    circuit.set_output(line_map[static_cast<std::size_t>(unit.sum_line)], "S_D");
    circuit.set_output(line_map[static_cast<std::size_t>(unit.carry_line)], "C_B");
    return circuit;
}

Circuit build_unit(DesignId d, UnitKind kind) {
    return kind == UnitKind::Half ? build_half(d) : build_full(d);
}

Circuit build_ripple(DesignId d, int width) {
    if (width < 1 || width > 64) {
        throw std::invalid_argument("ripple width must be in [1, 64], got " +
                                    std::to_string(width));
    }
    Circuit circuit;
    circuit.name = design_prefix(d) + "_ripple" + std::to_string(width);

    const UnitTemplate& half = unit_template(d, UnitKind::Half);
    const UnitTemplate& full = unit_template(d, UnitKind::Full);

    std::vector<int> sum_lines(static_cast<std::size_t>(width));
    int carry_line = -1;
    int ctrl_line = -1;

    for (int stage = 0; stage < width; ++stage) {
        const bool first = stage == 0;
        const UnitTemplate& unit = first ? half : full;
        std::vector<int> line_map;
        line_map.push_back(circuit.add_input("A" + std::to_string(stage)));
        line_map.push_back(circuit.add_input("B" + std::to_string(stage)));
        if (first) {
            ctrl_line = circuit.add_input("ctrl");
            line_map.push_back(ctrl_line);  // half local 2 = ctrl
        } else {
            line_map.push_back(carry_line);  // full local 2 = Cin
            line_map.push_back(ctrl_line);   // full local 3 = ctrl
        }
        for (int k = 0; k < unit.const_count; ++k) {
            line_map.push_back(circuit.add_constant(0));
        }
        emit_unit(circuit, unit, line_map);
        sum_lines[static_cast<std::size_t>(stage)] =
            line_map[static_cast<std::size_t>(unit.sum_line)];
        carry_line = line_map[static_cast<std::size_t>(unit.carry_line)];
    }

    for (int stage = 0; stage < width; ++stage) {
        circuit.set_output(sum_lines[static_cast<std::size_t>(stage)],
                           "S_D" + std::to_string(stage));
    }
    circuit.set_output(carry_line, "C_B" + std::to_string(width));
    return circuit;
}

Metrics ripple_metrics_paper(DesignId d, int width) {
    if (width < 1) {
        throw std::invalid_argument("width must be >= 1, got " + std::to_string(width));
    }
    return compute_metrics(build_half(d)) + (width - 1) * compute_metrics(build_full(d));
}

AddSubPorts AddSubPorts::resolve(const Circuit& circuit) {
    auto fail = [](const std::string& why) {
        throw std::invalid_argument("circuit does not expose ripple ports: " + why);
    };
    auto indexed = [](const std::string& name, std::string_view prefix) -> int {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) {
            return -1;
        }
        int value = 0;
        for (std::size_t i = prefix.size(); i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
                return -1;
            }
            value = value * 10 + (name[i] - '0');
        }
        return value;
    };
    auto place = [&](std::vector<int>& slots, int index, int line, const std::string& name) {
        if (index >= static_cast<int>(slots.size())) {
            slots.resize(static_cast<std::size_t>(index) + 1, -1);
        }
        if (slots[static_cast<std::size_t>(index)] != -1) {
            fail("duplicate port " + name);
        }
        slots[static_cast<std::size_t>(index)] = line;
    };

    AddSubPorts ports;
    int carry_index = -1;
    for (std::size_t i = 0; i < circuit.lines.size(); ++i) {
        const int line = static_cast<int>(i);
        const auto& input = circuit.lines[i].input;
        if (!input.is_constant) {
            if (input.name == "ctrl") {
                ports.ctrl_line = line;
            } else if (const int k = indexed(input.name, "A"); k >= 0) {
                place(ports.a_lines, k, line, input.name);
            } else if (const int k2 = indexed(input.name, "B"); k2 >= 0) {
                place(ports.b_lines, k2, line, input.name);
            } else {
                fail("unexpected input " + input.name);
            }
        }
        const auto& output = circuit.lines[i].output;
        if (!output.is_garbage) {
            if (const int k = indexed(output.name, "S_D"); k >= 0) {
                place(ports.sum_lines, k, line, output.name);
            } else if (const int k2 = indexed(output.name, "C_B"); k2 >= 0) {
                if (carry_index != -1) {
                    fail("duplicate carry output " + output.name);
                }
                carry_index = k2;
                ports.carry_line = line;
            } else {
                fail("unexpected output " + output.name);
            }
        }
    }

    ports.width = static_cast<int>(ports.a_lines.size());
    if (ports.width == 0) {
        fail("no A inputs");
    }
    if (ports.ctrl_line == -1) {
        fail("no ctrl input");
    }
    if (ports.carry_line == -1) {
        fail("no carry output");
    }
    if (carry_index != ports.width) {
        fail("carry output C_B" + std::to_string(carry_index) + " does not match width " +
             std::to_string(ports.width));
    }
    if (static_cast<int>(ports.b_lines.size()) != ports.width ||
        static_cast<int>(ports.sum_lines.size()) != ports.width) {
        fail("A/B/S_D port counts differ");
    }
    for (int k = 0; k < ports.width; ++k) {
        if (ports.a_lines[static_cast<std::size_t>(k)] == -1 ||
            ports.b_lines[static_cast<std::size_t>(k)] == -1 ||
            ports.sum_lines[static_cast<std::size_t>(k)] == -1) {
            fail("missing port at bit " + std::to_string(k));
        }
    }
    return ports;
}

AddSubResult run_addsub(const Circuit& circuit, const AddSubPorts& ports, DesignId d,
                        Mode mode, std::uint64_t a, std::uint64_t b) {
    std::vector<std::uint8_t> state(circuit.lines.size(), 0);
    for (std::size_t i = 0; i < circuit.lines.size(); ++i) {
        if (circuit.lines[i].input.is_constant) {
            state[i] = static_cast<std::uint8_t>(circuit.lines[i].input.value);
        }
    }
    for (int k = 0; k < ports.width; ++k) {
        state[static_cast<std::size_t>(ports.a_lines[static_cast<std::size_t>(k)])] =
            static_cast<std::uint8_t>((a >> k) & 1u);
        state[static_cast<std::size_t>(ports.b_lines[static_cast<std::size_t>(k)])] =
            static_cast<std::uint8_t>((b >> k) & 1u);
    }
    state[static_cast<std::size_t>(ports.ctrl_line)] =
        static_cast<std::uint8_t>(mode_to_ctrl(d).at(mode));

    run_gates_inplace(circuit, state);

    AddSubResult result;
    for (int k = 0; k < ports.width; ++k) {
        result.value |= static_cast<std::uint64_t>(
                            state[static_cast<std::size_t>(
                                ports.sum_lines[static_cast<std::size_t>(k)])])
                        << k;
    }
    result.flag = state[static_cast<std::size_t>(ports.carry_line)];
    return result;
}

}  // namespace revarith
