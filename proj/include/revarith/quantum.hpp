#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "revarith/gates.hpp"

namespace revarith {

/// Dense complex matrices are capped at 12 lines (4096x4096); the shipped
/// decompositions only ever need 3 lines, the headroom is for experiments.
inline constexpr int kMaxUnitaryLines = 12;

/// Entrywise tolerance for declaring a primitive sequence equal to a gate's
/// permutation matrix. No global-phase allowance: these sequences realize the
/// boolean gates exactly, so the tolerance absorbs floating-point error only.
inline constexpr double kDecompositionTolerance = 1e-10;

enum class PrimitiveKind { Not, Cnot, V, Vdag };

/// A one- or two-line quantum primitive. `control` is -1 for Not.
struct Primitive {
    PrimitiveKind kind = PrimitiveKind::Not;
    int control = -1;
    int target = 0;

    bool is_two_line() const { return kind != PrimitiveKind::Not; }
    bool operator==(const Primitive&) const = default;
};

Primitive not_on(int target);
Primitive cnot(int control, int target);
Primitive cv(int control, int target);
Primitive cvdag(int control, int target);

/// "NOT(1)", "CNOT(0,1)", "CV(1,2)", "CV+(1,2)".
std::string to_string(const Primitive& p);

struct PrimitiveSeq {
    int line_count = 0;
    std::vector<Primitive> ops;

    bool operator==(const PrimitiveSeq&) const = default;
};

/// Dense row-major complex matrix of dimension 2^lines. Basis states use
/// the boolean packing convention: bit k of the index is the value of line k.
class Unitary {
   public:
    using Complex = std::complex<double>;

    /// Identity matrix on `lines` lines. Throws std::length_error past the cap.
    static Unitary identity(int lines);

    int lines() const { return lines_; }
    std::size_t dim() const { return dim_; }

    Complex& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex& at(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    Unitary operator*(const Unitary& rhs) const;
    Unitary adjoint() const;

    double max_abs_diff(const Unitary& other) const;
    bool approx_equal(const Unitary& other, double tol) const;
    bool is_unitary(double tol = 1e-12) const;

   private:
    explicit Unitary(int lines);

    int lines_ = 0;
    std::size_t dim_ = 1;
    std::vector<Complex> data_;

    friend Unitary primitive_unitary(const Primitive& p, int line_count);
    friend Unitary sequence_unitary(const PrimitiveSeq& seq);
    friend Unitary permutation_matrix(const Permutation& perm);
    friend void apply_primitive_left(const Primitive& p, Unitary& u);
};

/// Square root of NOT: V = 1/2 [[1+i, 1-i], [1-i, 1+i]], and its adjoint.
/// V*V = NOT, V*V+ = V+*V = I, V+*V+ = NOT.
Unitary v_matrix();
Unitary vdag_matrix();

/// Matrix of a single primitive on `line_count` lines. A controlled
/// primitive acts on the target where the control bit is 1 and is the
/// identity otherwise.
Unitary primitive_unitary(const Primitive& p, int line_count);

/// Product of a sequence, applied left to right: the first op in `ops`
/// multiplies the state first, so the result is U_last * ... * U_first.
Unitary sequence_unitary(const PrimitiveSeq& seq);

/// 0/1 matrix sending basis state |x> to |perm[x]>.
Unitary permutation_matrix(const Permutation& perm);

/// Reference primitive sequence for each catalog gate. NOT and FG lower to
/// themselves; the three-line gates use the standard controlled-V networks.
PrimitiveSeq decompose(GateKind kind);

/// Recomputed primitive cost: the number of maximal contiguous groups of
/// two-line primitives acting on the same unordered line pair. NOT
/// primitives cost 0 and do not break a group when they act on a line of
/// the current pair; a NOT on any other line ends the group.
int grouped_cost(const PrimitiveSeq& seq);

struct DecompositionReport {
    GateKind kind = GateKind::NOT;
    PrimitiveSeq seq;
    bool unitary_match = false;
    double max_error = 0.0;  ///< entrywise distance to the permutation matrix
    int computed_cost = 0;   ///< grouped_cost of the sequence
    int catalog_cost = 0;    ///< cost listed in the gate catalog
};

/// Checks decompose(kind) against the gate's permutation matrix and
/// reports the recomputed cost next to the catalog cost. A cost mismatch is
/// reported, never fatal; the catalog stays authoritative for circuit
/// metrics.
DecompositionReport verify_decomposition(GateKind kind);

/// Brute-force search for an exact realization of a three-line gate using
/// at most `max_len` primitives from {CNOT, CV, CV+} over all ordered line
/// pairs (18 choices per slot). Deterministic: length ascending,
/// lexicographic in the fixed alphabet order. Returns the first match, or
/// nothing.
std::optional<PrimitiveSeq> search_decomposition(GateKind kind, int max_len);

}  // namespace revarith
