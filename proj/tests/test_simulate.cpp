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

/// FEYNMAN on two named lines: inputs (first, second), outputs (P, Q).
Circuit feynman_pair(const std::string& first, const std::string& second) {
    Circuit c;
    c.name = "pair";
    const int a = c.add_input(first);
    const int b = c.add_input(second);
    c.set_output(a, "P");
    c.set_output(b, "Q");
    c.add_gate(GateKind::FG, {a, b});
    return c;
}

Circuit wide_identity(int input_count) {
    Circuit c;
    c.name = "wide";
    for (int i = 0; i < input_count; ++i) {
        c.add_input("x" + std::to_string(i));
    }
    return c;
}

}  // namespace

TEST_CASE("evaluate runs the gate list over named assignments") {
    const Circuit c = feynman_pair("A", "B");
    CHECK(evaluate(c, {{"A", 1}, {"B", 1}}) == std::vector<int>{1, 0});
    CHECK(evaluate(c, {{"A", 0}, {"B", 1}}) == std::vector<int>{0, 1});
    const auto outputs = primary_output_values(c, evaluate(c, {{"A", 1}, {"B", 0}}));
    CHECK(outputs.at("P") == 1);
    CHECK(outputs.at("Q") == 1);
}

TEST_CASE("evaluate rejects missing, unknown and non-bit assignments") {
    const Circuit c = feynman_pair("A", "B");
    CHECK_THROWS_WITH_AS(evaluate(c, {{"A", 1}}), "missing assignment for input B",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(evaluate(c, {{"A", 1}, {"B", 0}, {"C", 1}}),
                         "assignment names unknown input C", std::invalid_argument);
    CHECK_THROWS_WITH_AS(evaluate(c, {{"A", 2}, {"B", 0}}),
                         "assignment for A must be 0 or 1", std::invalid_argument);
    Circuit broken = c;
    broken.add_gate(GateKind::FG, {0, 0});
    CHECK_THROWS_AS(evaluate(broken, {{"A", 1}, {"B", 0}}), std::invalid_argument);
}

TEST_CASE("evaluate_packed feeds primary inputs in line order, bit 0 first") {
    Circuit c;
    c.name = "packed";
    c.add_input("A");
    c.add_constant(1);
    c.add_input("B");
    c.add_gate(GateKind::TOFFOLI, {0, 1, 2});
    // packed bit 0 -> line 0 (A), bit 1 -> line 2 (B); line 1 is constant 1.
    CHECK(evaluate_packed(c, 0b01) == std::vector<int>{1, 1, 1});
    CHECK(evaluate_packed(c, 0b10) == std::vector<int>{0, 1, 1});
}

TEST_CASE("truth_table of a single FEYNMAN gate lists four rows") {
    const TruthTable table = truth_table(feynman_pair("A", "B"));
    CHECK(table.input_names == std::vector<std::string>{"A", "B"});
    CHECK(table.output_names == std::vector<std::string>{"P", "Q"});
    REQUIRE(table.rows.size() == 4);
    CHECK(table.rows[0] == std::vector<int>{0, 0});
    CHECK(table.rows[1] == std::vector<int>{1, 1});
    CHECK(table.rows[2] == std::vector<int>{0, 1});
    CHECK(table.rows[3] == std::vector<int>{1, 0});
}

TEST_CASE("truth_table lists garbage columns after the primary outputs") {
    Circuit c;
    c.name = "garbage_cols";
    const int a = c.add_input("A");
    const int b = c.add_input("B");
    c.set_output(b, "Q");
    c.add_gate(GateKind::FG, {a, b});
    const TruthTable table = truth_table(c);
    CHECK(table.output_names == std::vector<std::string>{"Q", "g1"});
    REQUIRE(table.rows.size() == 4);
    CHECK(table.rows[3] == std::vector<int>{0, 1});  // A=1,B=1 -> Q=0, g1=A=1
}

TEST_CASE("truth_table refuses more than 24 primary inputs") {
    CHECK_THROWS_WITH_AS(truth_table(wide_identity(25)),
                         "truth_table supports at most 24 primary inputs, got 25",
                         std::length_error);
    CHECK(truth_table(wide_identity(2)).rows.size() == 4);
}

TEST_CASE("line_permutation reproduces the catalog mapping of a lone gate") {
    Circuit c;
    c.name = "lone_fg";
    c.add_input("A");
    c.add_input("B");
    c.add_gate(GateKind::FG, {0, 1});
    CHECK(line_permutation(c).table == std::vector<std::uint32_t>{0, 3, 2, 1});
}

TEST_CASE("line_permutation of a gateless circuit is the identity") {
    const Circuit c = wide_identity(3);
    const Permutation perm = line_permutation(c);
    REQUIRE(perm.size() == 8);
    for (std::uint32_t x = 0; x < 8; ++x) {
        CHECK(perm.table[x] == x);
    }
}

TEST_CASE("every design's full unit permutes its 7-line state space bijectively") {
    for (const DesignId d : all_designs) {
        const Circuit unit = build_full(d);
        const Permutation perm = line_permutation(unit);
        CAPTURE(unit.name);
        CHECK(perm.size() == (std::size_t{1} << unit.lines.size()));
        CHECK(perm.is_bijection());
    }
    CHECK(line_permutation(build_full(DesignId::D1)).size() == 128);
}

TEST_CASE("line_permutation refuses more than 20 lines") {
    CHECK_THROWS_WITH_AS(line_permutation(wide_identity(21)),
                         "line_permutation supports at most 20 lines, got 21",
                         std::length_error);
}

TEST_CASE("a circuit is equivalent to itself and to a line-reordered twin") {
    const Circuit c = feynman_pair("A", "B");
    CHECK(equivalent(c, c));
    // Same function with the lines stored in the opposite order.
    Circuit twin;
    twin.name = "twin";
    const int b = twin.add_input("B");
    const int a = twin.add_input("A");
    twin.set_output(a, "P");
    twin.set_output(b, "Q");
    twin.add_gate(GateKind::FG, {a, b});
    CHECK(equivalent(c, twin));
}

TEST_CASE("swapping the FEYNMAN arguments is observable and not equivalent") {
    const Circuit c = feynman_pair("A", "B");
    Circuit swapped = feynman_pair("A", "B");
    swapped.gates[0].lines = {1, 0};  // FG(B, A): P = A^B, Q = B
    CHECK_FALSE(equivalent(c, swapped));
}

TEST_CASE("equivalent requires matching primary interface names") {
    const Circuit c = feynman_pair("A", "B");
    CHECK_THROWS_WITH_AS(equivalent(c, feynman_pair("A", "C")),
                         "primary input names differ: -B +C", std::invalid_argument);
    Circuit renamed = feynman_pair("A", "B");
    renamed.lines[1].output.name = "R";
    CHECK_THROWS_WITH_AS(equivalent(c, renamed), "primary output names differ: -Q +R",
                         std::invalid_argument);
}

TEST_CASE("addsub_oracle reproduces modular arithmetic with carry and borrow") {
    CHECK(addsub_oracle(8, Mode::Add, 200, 100) == AddSubResult{44, 1});
    CHECK(addsub_oracle(8, Mode::Sub, 5, 7) == AddSubResult{254, 1});
    CHECK(addsub_oracle(8, Mode::Sub, 7, 7) == AddSubResult{0, 0});
    CHECK(addsub_oracle(8, Mode::Add, 0, 0) == AddSubResult{0, 0});
    CHECK(addsub_oracle(8, Mode::Add, 255, 255) == AddSubResult{254, 1});
    CHECK(addsub_oracle(1, Mode::Add, 1, 1) == AddSubResult{0, 1});
    CHECK(addsub_oracle(1, Mode::Sub, 0, 1) == AddSubResult{1, 1});
    CHECK(addsub_oracle(64, Mode::Add, ~std::uint64_t{0}, 1) == AddSubResult{0, 1});
    CHECK(addsub_oracle(64, Mode::Sub, 0, 1) ==
          AddSubResult{~std::uint64_t{0}, 1});
}

TEST_CASE("addsub_oracle rejects bad widths and oversized operands") {
    CHECK_THROWS_WITH_AS(addsub_oracle(0, Mode::Add, 0, 0),
                         "width must be in [1, 64], got 0", std::invalid_argument);
    CHECK_THROWS_WITH_AS(addsub_oracle(65, Mode::Add, 0, 0),
                         "width must be in [1, 64], got 65", std::invalid_argument);
    CHECK_THROWS_WITH_AS(addsub_oracle(4, Mode::Add, 16, 0),
                         "operands must be < 2^width", std::invalid_argument);
}

TEST_CASE("run_gates_inplace leaves untouched lines alone") {
    Circuit c;
    c.name = "inplace";
    c.add_input("A");
    c.add_input("B");
    c.add_input("C");
    c.add_gate(GateKind::FG, {0, 2});
    std::vector<std::uint8_t> state{1, 1, 0};
    run_gates_inplace(c, state);
    CHECK(state == std::vector<std::uint8_t>{1, 1, 1});
}
