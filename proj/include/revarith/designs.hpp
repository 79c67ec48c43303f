#pragma once

#include "revarith/netlist.hpp"
#include "revarith/simulate.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace revarith {

/// The three adder/subtractor designs, ordered as introduced: D1 built from
/// Fredkin/Feynman gates, D2 from TR gates, D3 from Peres gates.
enum class DesignId { D1 = 1, D2 = 2, D3 = 3 };

inline constexpr std::array<DesignId, 3> all_designs{DesignId::D1, DesignId::D2,
                                                     DesignId::D3};

int design_number(DesignId d);
std::optional<DesignId> design_from_number(int number);

/// Stage flavor inside a ripple chain: stage 0 is Half, the rest are Full.
enum class UnitKind { Half, Full };

/// The ctrl bit that selects each mode. D3 adds at ctrl = 0; the TR- and
/// Fredkin-based cores of D1 and D2 complement the product term that feeds
/// the carry/borrow, which forces the opposite polarity (add at ctrl = 1).
/// Public interfaces speak Mode so the polarity never leaks.
std::map<Mode, int> mode_to_ctrl(DesignId d);

/// One-bit unit with primary inputs {A, B, ctrl} and outputs {S_D, C_B}.
/// Under the mode mapping: Add gives S_D = A^B, C_B = A&B; Sub gives
/// S_D = A^B, C_B = ~A&B (borrow).
Circuit build_half(DesignId d);

/// One-bit unit with primary inputs {A, B, Cin, ctrl} and outputs
/// {S_D, C_B}; a full adder under Add, a full subtractor under Sub with Cin
/// as borrow-in.
Circuit build_full(DesignId d);

Circuit build_unit(DesignId d, UnitKind kind);

/// N-bit ripple chain: a half unit on (A0, B0), then full units with each
/// Cin wired to the previous carry line and one shared ctrl line threaded
/// through every stage. Primary inputs A0..A<n-1>, B0..B<n-1>, ctrl; primary
/// outputs S_D0..S_D<n-1> and the final carry C_B<n>. Width 1..64.
Circuit build_ripple(DesignId d, int width);

/// Compositional accounting: metrics(half) + (width-1) * metrics(full) with
/// each field summed independently. Differs from compute_metrics on the
/// built ripple only in gate-independent fields: unit-wise accounting counts
/// the shared ctrl line's output as garbage once per stage.
Metrics ripple_metrics_paper(DesignId d, int width);

/// Resolved line indices of a ripple circuit's ports, so repeated
/// simulations skip the name lookups. resolve() throws std::invalid_argument
/// when the circuit does not expose the ripple port names.
struct AddSubPorts {
    int width = 0;
    std::vector<int> a_lines;    ///< line carrying input A_k
    std::vector<int> b_lines;    ///< line carrying input B_k
    int ctrl_line = -1;
    std::vector<int> sum_lines;  ///< line producing S_D<k>
    int carry_line = -1;         ///< line producing C_B<width>

    static AddSubPorts resolve(const Circuit& circuit);
};

/// One arithmetic run on a built ripple circuit: loads a, b and the ctrl bit
/// for `mode`, executes the gates, and reads back (value, carry/borrow).
AddSubResult run_addsub(const Circuit& circuit, const AddSubPorts& ports, DesignId d,
                        Mode mode, std::uint64_t a, std::uint64_t b);

}  // namespace revarith
