#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace revarith {

/// The six gates of the catalog. Every mapping is a bijection on
/// {0,1}^arity; NOT and FG cost 0 and 1, the 3-line gates carry their
/// usual costs in elementary quantum primitives.
enum class GateKind : std::uint8_t {
    NOT,      ///< 1 line,  P = A'
    FG,       ///< 2 lines, Feynman / CNOT
    TOFFOLI,  ///< 3 lines, controlled-controlled NOT
    PERES,    ///< 3 lines, Toffoli and Feynman fused
    FREDKIN,  ///< 3 lines, controlled swap
    TR        ///< 3 lines, complemented-control product, used for borrow logic
};

inline constexpr std::array<GateKind, 6> all_gate_kinds{
    GateKind::NOT,   GateKind::FG,      GateKind::TOFFOLI,
    GateKind::PERES, GateKind::FREDKIN, GateKind::TR};

/// Catalog entry: line count, boolean mapping and the catalog quantum cost.
/// The catalog cost is authoritative for all metric accounting, even where a
/// primitive-level recomputation disagrees (see quantum.hpp).
struct GateSpec {
    GateKind kind;
    std::string_view name;      ///< long name, e.g. "TOFFOLI"
    std::string_view mnemonic;  ///< netlist mnemonic, e.g. "TOF"
    int arity;                  ///< 1, 2 or 3 lines
    int quantum_cost;
    std::string_view formula;   ///< output expressions, for listings
    /// truth[x] = image of the packed input x, for x < 2^arity.
    /// Bit k of an index is the value of line k in (A,B,C) order; A = bit 0.
    std::array<std::uint8_t, 8> truth;
};

/// A bijection on [0, size); table[i] is the image of basis index i.
/// Packing convention as in GateSpec::truth: line k = bit k, A least significant.
struct Permutation {
    std::vector<std::uint32_t> table;

    std::size_t size() const { return table.size(); }
    bool is_bijection() const;
    bool operator==(const Permutation&) const = default;
};

/// Immutable catalog entry for a gate kind.
const GateSpec& gate_spec(GateKind kind);

/// Gate lookup by mnemonic or long name (e.g. "TOF", "TOFFOLI", "CNOT").
std::optional<GateKind> gate_from_name(std::string_view token);

/// Applies the gate mapping to a packed input (bit k = line k, A = bit 0).
/// `input` must be < 2^arity.
unsigned apply_gate_packed(GateKind kind, unsigned input);

/// Applies the gate mapping to an explicit bit tuple of the gate's arity.
/// Throws std::invalid_argument on arity mismatch or non-bit values.
std::vector<int> apply_gate(GateKind kind, const std::vector<int>& input);

/// Exhaustive mapping of a gate as a permutation of size 2^arity.
Permutation gate_permutation(GateKind kind);

}  // namespace revarith
