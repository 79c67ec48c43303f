#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "revarith/designs.hpp"
#include "revarith/netlist.hpp"
#include "revarith/simulate.hpp"

using namespace revarith;

namespace {

struct UnitOutputs {
    int sum;
    int carry;
};

UnitOutputs run_unit(const Circuit& unit, const Assignment& assignment) {
    const auto outputs = primary_output_values(unit, evaluate(unit, assignment));
    return {outputs.at("S_D"), outputs.at("C_B")};
}

/// Textbook one-bit add/sub behavior; cin doubles as borrow-in under Sub.
UnitOutputs expected_unit(Mode mode, int a, int b, int cin) {
    const int sum = a ^ b ^ cin;
    if (mode == Mode::Add) {
        return {sum, (a & b) | (a & cin) | (b & cin)};
    }
    const int na = a ^ 1;
    return {sum, (na & b) | (na & cin) | (b & cin)};
}

}  // namespace

TEST_CASE("design ids map to and from their published numbering") {
    CHECK(design_number(DesignId::D1) == 1);
    CHECK(design_number(DesignId::D2) == 2);
    CHECK(design_number(DesignId::D3) == 3);
    CHECK(design_from_number(1) == DesignId::D1);
    CHECK(design_from_number(3) == DesignId::D3);
    CHECK_FALSE(design_from_number(0).has_value());
    CHECK_FALSE(design_from_number(4).has_value());
}

TEST_CASE("the ctrl polarity is design-specific") {
    CHECK(mode_to_ctrl(DesignId::D3).at(Mode::Add) == 0);
    CHECK(mode_to_ctrl(DesignId::D3).at(Mode::Sub) == 1);
    for (const DesignId d : {DesignId::D1, DesignId::D2}) {
        CHECK(mode_to_ctrl(d).at(Mode::Add) == 1);
        CHECK(mode_to_ctrl(d).at(Mode::Sub) == 0);
    }
}

TEST_CASE("unit metrics match the published per-design counts") {
    const Metrics half_expected[] = {{4, 2, 3, 12}, {3, 1, 2, 8}, {3, 1, 2, 6}};
    const Metrics full_expected[] = {{8, 3, 5, 21}, {4, 1, 3, 14}, {4, 1, 3, 10}};
    for (const DesignId d : all_designs) {
        const int i = design_number(d) - 1;
        CAPTURE(i);
        CHECK(compute_metrics(build_half(d)) == half_expected[i]);
        CHECK(compute_metrics(build_full(d)) == full_expected[i]);
    }
}

TEST_CASE("every half unit implements the textbook half adder and subtractor") {
    for (const DesignId d : all_designs) {
        const Circuit unit = build_half(d);
        for (const Mode mode : {Mode::Add, Mode::Sub}) {
            const int ctrl = mode_to_ctrl(d).at(mode);
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const UnitOutputs got =
                        run_unit(unit, {{"A", a}, {"B", b}, {"ctrl", ctrl}});
                    const UnitOutputs want = expected_unit(mode, a, b, 0);
                    CAPTURE(unit.name);
                    CAPTURE(mode_name(mode));
                    CAPTURE(a);
                    CAPTURE(b);
                    CHECK(got.sum == want.sum);
                    CHECK(got.carry == want.carry);
                }
            }
        }
    }
}

TEST_CASE("every full unit implements the textbook full adder and subtractor") {
    for (const DesignId d : all_designs) {
        const Circuit unit = build_full(d);
        for (const Mode mode : {Mode::Add, Mode::Sub}) {
            const int ctrl = mode_to_ctrl(d).at(mode);
            for (int x = 0; x < 8; ++x) {
                const int a = x & 1, b = (x >> 1) & 1, cin = (x >> 2) & 1;
                const UnitOutputs got = run_unit(
                    unit, {{"A", a}, {"B", b}, {"Cin", cin}, {"ctrl", ctrl}});
                const UnitOutputs want = expected_unit(mode, a, b, cin);
                CAPTURE(unit.name);
                CAPTURE(mode_name(mode));
                CAPTURE(x);
                CHECK(got.sum == want.sum);
                CHECK(got.carry == want.carry);
            }
        }
    }
}

TEST_CASE("documented unit spot values") {
    // D3 adds at ctrl = 0 and subtracts at ctrl = 1.
    CHECK(run_unit(build_half(DesignId::D3), {{"A", 1}, {"B", 1}, {"ctrl", 0}}).sum == 0);
    CHECK(run_unit(build_half(DesignId::D3), {{"A", 1}, {"B", 1}, {"ctrl", 0}}).carry == 1);
    CHECK(run_unit(build_half(DesignId::D3), {{"A", 0}, {"B", 0}, {"ctrl", 1}}).sum == 0);
    CHECK(run_unit(build_half(DesignId::D3), {{"A", 0}, {"B", 0}, {"ctrl", 1}}).carry == 0);
    // D2 adds at ctrl = 1: 1+1+1 = 11b.
    const int d2_add = mode_to_ctrl(DesignId::D2).at(Mode::Add);
    const UnitOutputs d2 = run_unit(build_full(DesignId::D2),
                                    {{"A", 1}, {"B", 1}, {"Cin", 1}, {"ctrl", d2_add}});
    CHECK(d2.sum == 1);
    CHECK(d2.carry == 1);
    // D3 subtract: 1 - 0 - 1 = 0 borrow 0.
    const int d3_sub = mode_to_ctrl(DesignId::D3).at(Mode::Sub);
    const UnitOutputs d3 = run_unit(build_full(DesignId::D3),
                                    {{"A", 1}, {"B", 0}, {"Cin", 1}, {"ctrl", d3_sub}});
    CHECK(d3.sum == 0);
    CHECK(d3.carry == 0);
}

TEST_CASE("build_unit dispatches to the half and full builders") {
    for (const DesignId d : all_designs) {
        CHECK(build_unit(d, UnitKind::Half) == build_half(d));
        CHECK(build_unit(d, UnitKind::Full) == build_full(d));
    }
}

TEST_CASE("all six units validate clean and permute their lines bijectively") {
    for (const DesignId d : all_designs) {
        for (const UnitKind kind : {UnitKind::Half, UnitKind::Full}) {
            const Circuit unit = build_unit(d, kind);
            CAPTURE(unit.name);
            CHECK(validate(unit).empty());
            CHECK(line_permutation(unit).is_bijection());
        }
    }
}

TEST_CASE("ripple circuits validate clean at several widths") {
    for (const DesignId d : all_designs) {
        for (const int width : {1, 2, 3, 8, 16, 64}) {
            const Circuit circuit = build_ripple(d, width);
            CAPTURE(circuit.name);
            CHECK(validate(circuit).empty());
            CHECK(circuit.name ==
                  "d" + std::to_string(design_number(d)) + "_ripple" + std::to_string(width));
        }
    }
}

TEST_CASE("ripple width bounds are enforced") {
    CHECK_THROWS_WITH_AS(build_ripple(DesignId::D1, 0),
                         "ripple width must be in [1, 64], got 0", std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_ripple(DesignId::D1, 65),
                         "ripple width must be in [1, 64], got 65", std::invalid_argument);
}

TEST_CASE("a width-1 ripple is the half unit up to port naming") {
    for (const DesignId d : all_designs) {
        const Circuit ripple = build_ripple(d, 1);
        const Circuit half = build_half(d);
        CHECK(ripple.gates == half.gates);
        REQUIRE(ripple.lines.size() == half.lines.size());
        for (std::size_t i = 0; i < ripple.lines.size(); ++i) {
            CHECK(ripple.lines[i].input.is_constant == half.lines[i].input.is_constant);
            CHECK(ripple.lines[i].input.value == half.lines[i].input.value);
            CHECK(ripple.lines[i].output.is_garbage == half.lines[i].output.is_garbage);
        }
        const auto outputs = primary_output_values(
            ripple, evaluate(ripple, {{"A0", 1}, {"B0", 1},
                                      {"ctrl", mode_to_ctrl(d).at(Mode::Add)}}));
        CHECK(outputs.at("S_D0") == 0);
        CHECK(outputs.at("C_B1") == 1);
    }
}

TEST_CASE("the 8-bit chains reproduce the published example sum") {
    for (const DesignId d : all_designs) {
        const Circuit circuit = build_ripple(d, 8);
        const AddSubPorts ports = AddSubPorts::resolve(circuit);
        CHECK(run_addsub(circuit, ports, d, Mode::Add, 200, 100) == AddSubResult{44, 1});
        CHECK(run_addsub(circuit, ports, d, Mode::Sub, 5, 7) == AddSubResult{254, 1});
        CHECK(run_addsub(circuit, ports, d, Mode::Sub, 7, 7) == AddSubResult{0, 0});
    }
}

TEST_CASE("width-4 chains match the oracle exhaustively in both modes") {
    for (const DesignId d : all_designs) {
        const Circuit circuit = build_ripple(d, 4);
        const AddSubPorts ports = AddSubPorts::resolve(circuit);
        for (const Mode mode : {Mode::Add, Mode::Sub}) {
            for (std::uint64_t a = 0; a < 16; ++a) {
                for (std::uint64_t b = 0; b < 16; ++b) {
                    CAPTURE(design_number(d));
                    CAPTURE(mode_name(mode));
                    CAPTURE(a);
                    CAPTURE(b);
                    CHECK(run_addsub(circuit, ports, d, mode, a, b) ==
                          addsub_oracle(4, mode, a, b));
                }
            }
        }
    }
}

TEST_CASE("port resolution finds every ripple port by name") {
    const Circuit circuit = build_ripple(DesignId::D2, 3);
    const AddSubPorts ports = AddSubPorts::resolve(circuit);
    CHECK(ports.width == 3);
    CHECK(ports.a_lines.size() == 3);
    CHECK(ports.b_lines.size() == 3);
    CHECK(ports.sum_lines.size() == 3);
    CHECK(ports.ctrl_line == 2);  // stage 0 pushes A0, B0, ctrl
    CHECK(ports.a_lines[0] == 0);
    CHECK(ports.b_lines[0] == 1);
    for (const int line : ports.sum_lines) {
        CHECK_FALSE(circuit.lines[static_cast<std::size_t>(line)].output.is_garbage);
    }
}

TEST_CASE("port resolution rejects circuits without the ripple interface") {
    Circuit c;
    c.name = "not_a_ripple";
    c.add_input("X");
    CHECK_THROWS_AS(AddSubPorts::resolve(c), std::invalid_argument);
    try {
        AddSubPorts::resolve(c);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("circuit does not expose ripple ports") == 0);
    }
}

TEST_CASE("unit-wise accounting composes one half and width-1 full units") {
    CHECK(ripple_metrics_paper(DesignId::D2, 1) == Metrics{3, 1, 2, 8});
    for (const DesignId d : all_designs) {
        const Metrics half = compute_metrics(build_half(d));
        const Metrics full = compute_metrics(build_full(d));
        CHECK(ripple_metrics_paper(d, 8) == half + 7 * full);
        CHECK(ripple_metrics_paper(d, 1) == half);
    }
    CHECK_THROWS_AS(ripple_metrics_paper(DesignId::D1, 0), std::invalid_argument);
}

TEST_CASE("the published 8-bit table rows come out exactly") {
    CHECK(ripple_metrics_paper(DesignId::D1, 8) == Metrics{60, 23, 38, 159});
    CHECK(ripple_metrics_paper(DesignId::D2, 8) == Metrics{31, 8, 23, 106});
    CHECK(ripple_metrics_paper(DesignId::D3, 8) == Metrics{31, 8, 23, 76});
}

TEST_CASE("as-built metrics differ from unit-wise accounting only in garbage outputs") {
    for (const DesignId d : all_designs) {
        const Metrics paper = ripple_metrics_paper(d, 8);
        const Metrics as_built = compute_metrics(build_ripple(d, 8));
        CAPTURE(design_number(d));
        CHECK(as_built.gate_count == paper.gate_count);
        CHECK(as_built.garbage_inputs == paper.garbage_inputs);
        CHECK(as_built.quantum_cost == paper.quantum_cost);
        // The shared ctrl and threaded carries are counted once, not per stage.
        CHECK(as_built.garbage_outputs < paper.garbage_outputs);
    }
    CHECK(compute_metrics(build_ripple(DesignId::D1, 8)).garbage_outputs == 31);
    CHECK(compute_metrics(build_ripple(DesignId::D2, 8)).garbage_outputs == 16);
    CHECK(compute_metrics(build_ripple(DesignId::D3, 8)).garbage_outputs == 16);
}

TEST_CASE("all full units compute the same function after ctrl normalization") {
    // D1 and D2 add at ctrl = 1; complementing their ctrl on entry aligns
    // them with D3's polarity, after which the primary outputs must agree.
    const Circuit d3 = build_full(DesignId::D3);
    for (const DesignId d : {DesignId::D1, DesignId::D2}) {
        Circuit normalized = build_full(d);
        normalized.name = normalized.name + "_norm";
        int ctrl_line = -1;
        for (std::size_t i = 0; i < normalized.lines.size(); ++i) {
            if (!normalized.lines[i].input.is_constant &&
                normalized.lines[i].input.name == "ctrl") {
                ctrl_line = static_cast<int>(i);
            }
        }
        REQUIRE(ctrl_line >= 0);
        normalized.gates.insert(normalized.gates.begin(),
                                GateInstance{GateKind::NOT, {ctrl_line}});
        CHECK(equivalent(normalized, d3));
    }
}

TEST_CASE("the three designs are pairwise equivalent as ripple chains") {
    // Same normalization trick at width 2: all designs implement the same
    // arithmetic, so only the ctrl polarity may differ.
    const Circuit d3 = build_ripple(DesignId::D3, 2);
    for (const DesignId d : {DesignId::D1, DesignId::D2}) {
        Circuit normalized = build_ripple(d, 2);
        normalized.name = normalized.name + "_norm";
        const AddSubPorts ports = AddSubPorts::resolve(normalized);
        normalized.gates.insert(normalized.gates.begin(),
                                GateInstance{GateKind::NOT, {ports.ctrl_line}});
        CHECK(equivalent(normalized, d3));
    }
}
