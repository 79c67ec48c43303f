#pragma once

#include "revarith/netlist.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace revarith {

/// Selects addition or subtraction in a unified adder/subtractor. The
/// mapping to the raw ctrl bit is design-specific (see designs.hpp).
enum class Mode { Add, Sub };

inline constexpr std::string_view mode_name(Mode m) {
    return m == Mode::Add ? "add" : "sub";
}

/// Values for every primary input by name.
using Assignment = std::map<std::string, int>;

/// Runs the gate sequence and returns the final value of every line.
/// Throws std::invalid_argument on an invalid circuit or on missing/extra
/// assignment keys.
std::vector<int> evaluate(const Circuit& circuit, const Assignment& assignment);

/// Fast path: primary inputs packed by position, bit k = k-th primary-input
/// line in line order. The circuit must already be valid.
std::vector<int> evaluate_packed(const Circuit& circuit, std::uint64_t inputs);

/// Lowest-level step: runs the gate sequence over a caller-prepared state,
/// one value per line. No validation; state.size() must equal the line
/// count. Useful for hot loops that rebuild only a few input bits per run.
void run_gates_inplace(const Circuit& circuit, std::vector<std::uint8_t>& state);

/// Named primary outputs extracted from an evaluate() result.
std::map<std::string, int> primary_output_values(const Circuit& circuit,
                                                 const std::vector<int>& line_values);

/// Exhaustive behavior over all primary-input assignments. Output columns
/// list the primary outputs first, then the garbage slots (g1, g2, ... in
/// line order). Rows are ordered by packed input index ascending; the first
/// listed input is bit 0.
struct TruthTable {
    std::vector<std::string> input_names;
    std::vector<std::string> output_names;
    std::vector<std::vector<int>> rows;
};

inline constexpr int kMaxTruthTableInputs = 24;
inline constexpr int kMaxPermutationLines = 20;

/// Throws std::length_error beyond kMaxTruthTableInputs primary inputs.
TruthTable truth_table(const Circuit& circuit);

/// Permutation over the state space of all lines; constants are treated as
/// free inputs. Throws std::length_error beyond kMaxPermutationLines lines.
Permutation line_permutation(const Circuit& circuit);

/// True iff the primary outputs agree for every assignment (garbage is
/// ignored). Both circuits must expose the same primary input and output
/// names; throws std::invalid_argument listing the differing names.
bool equivalent(const Circuit& lhs, const Circuit& rhs);

struct AddSubResult {
    std::uint64_t value = 0;
    int flag = 0;  ///< carry out for Add, borrow out for Sub
    bool operator==(const AddSubResult&) const = default;
};

/// Ground-truth modular arithmetic: add yields ((a+b) mod 2^n, carry),
/// sub yields ((a-b) mod 2^n, borrow). 1 <= width <= 64 and a, b < 2^width.
AddSubResult addsub_oracle(int width, Mode mode, std::uint64_t a, std::uint64_t b);

}  // namespace revarith
