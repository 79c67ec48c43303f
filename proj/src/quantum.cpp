#include "revarith/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace revarith {

namespace {

void check_line(int line, int line_count, const char* what) {
    if (line < 0 || line >= line_count) {
        throw std::invalid_argument(std::string(what) + " line " + std::to_string(line) +
                                    " out of range for " + std::to_string(line_count) +
                                    " lines");
    }
}

void check_primitive(const Primitive& p, int line_count) {
    check_line(p.target, line_count, "target");
    if (p.is_two_line()) {
        check_line(p.control, line_count, "control");
        if (p.control == p.target) {
            throw std::invalid_argument("control and target must differ, both are " +
                                        std::to_string(p.target));
        }
    }
}

const char* primitive_mnemonic(PrimitiveKind kind) {
    switch (kind) {
        case PrimitiveKind::Not: return "NOT";
        case PrimitiveKind::Cnot: return "CNOT";
        case PrimitiveKind::V: return "CV";
        case PrimitiveKind::Vdag: return "CV+";
    }
    return "?";
}

}  // namespace

Primitive not_on(int target) { return {PrimitiveKind::Not, -1, target}; }
Primitive cnot(int control, int target) { return {PrimitiveKind::Cnot, control, target}; }
Primitive cv(int control, int target) { return {PrimitiveKind::V, control, target}; }
Primitive cvdag(int control, int target) { return {PrimitiveKind::Vdag, control, target}; }

std::string to_string(const Primitive& p) {
    std::string s = primitive_mnemonic(p.kind);
    s += '(';
    if (p.is_two_line()) {
        s += std::to_string(p.control);
        s += ',';
    }
    s += std::to_string(p.target);
    s += ')';
    return s;
}

Unitary::Unitary(int lines) : lines_(lines) {
    if (lines < 1 || lines > kMaxUnitaryLines) {
        throw std::length_error("unitary supports 1 to " +
                                std::to_string(kMaxUnitaryLines) + " lines, got " +
                                std::to_string(lines));
    }
    dim_ = std::size_t{1} << lines;
    data_.assign(dim_ * dim_, Complex{0.0, 0.0});
}

Unitary Unitary::identity(int lines) {
    Unitary u(lines);
    for (std::size_t i = 0; i < u.dim_; ++i) {
        u.at(i, i) = Complex{1.0, 0.0};
    }
    return u;
}

Unitary Unitary::operator*(const Unitary& rhs) const {
    if (lines_ != rhs.lines_) {
        throw std::invalid_argument("matrix dimensions differ: " + std::to_string(lines_) +
                                    " vs " + std::to_string(rhs.lines_) + " lines");
    }
    Unitary out(lines_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex a = at(i, k);
            if (a == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < dim_; ++j) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

Unitary Unitary::adjoint() const {
    Unitary out(lines_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out.at(j, i) = std::conj(at(i, j));
        }
    }
    return out;
}

double Unitary::max_abs_diff(const Unitary& other) const {
    if (lines_ != other.lines_) {
        throw std::invalid_argument("matrix dimensions differ: " + std::to_string(lines_) +
                                    " vs " + std::to_string(other.lines_) + " lines");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

bool Unitary::approx_equal(const Unitary& other, double tol) const {
    return lines_ == other.lines_ && max_abs_diff(other) <= tol;
}

bool Unitary::is_unitary(double tol) const {
    return (*this * adjoint()).approx_equal(identity(lines_), tol);
}

Unitary v_matrix() {
    Unitary u = Unitary::identity(1);
    u.at(0, 0) = {0.5, 0.5};
    u.at(0, 1) = {0.5, -0.5};
    u.at(1, 0) = {0.5, -0.5};
    u.at(1, 1) = {0.5, 0.5};
    return u;
}

Unitary vdag_matrix() { return v_matrix().adjoint(); }

// In-place left multiplication u <- P * u, using the sparsity of P: a
// permutation primitive permutes rows; a controlled V / V+ mixes the two rows
// that differ in the target bit, among rows with the control bit set.
void apply_primitive_left(const Primitive& p, Unitary& u) {
    check_primitive(p, u.lines_);
    const std::size_t dim = u.dim_;
    const std::size_t t_mask = std::size_t{1} << p.target;

    if (p.kind == PrimitiveKind::Not || p.kind == PrimitiveKind::Cnot) {
        const std::size_t c_mask =
            p.kind == PrimitiveKind::Cnot ? std::size_t{1} << p.control : 0;
        for (std::size_t row = 0; row < dim; ++row) {
            const bool active = p.kind == PrimitiveKind::Not || (row & c_mask) != 0;
            if (active && (row & t_mask) == 0) {
                const std::size_t other = row | t_mask;
                for (std::size_t j = 0; j < dim; ++j) {
                    std::swap(u.at(row, j), u.at(other, j));
                }
            }
        }
        return;
    }

    const Unitary v2 = p.kind == PrimitiveKind::V ? v_matrix() : vdag_matrix();
    const std::size_t c_mask = std::size_t{1} << p.control;
    for (std::size_t r0 = 0; r0 < dim; ++r0) {
        if ((r0 & c_mask) == 0 || (r0 & t_mask) != 0) {
            continue;
        }
        const std::size_t r1 = r0 | t_mask;
        for (std::size_t j = 0; j < dim; ++j) {
            const Unitary::Complex a = u.at(r0, j);
            const Unitary::Complex b = u.at(r1, j);
            u.at(r0, j) = v2.at(0, 0) * a + v2.at(0, 1) * b;
            u.at(r1, j) = v2.at(1, 0) * a + v2.at(1, 1) * b;
        }
    }
}

Unitary primitive_unitary(const Primitive& p, int line_count) {
    Unitary u = Unitary::identity(line_count);
    apply_primitive_left(p, u);
    return u;
}

Unitary sequence_unitary(const PrimitiveSeq& seq) {
    Unitary u = Unitary::identity(seq.line_count);
    for (const auto& op : seq.ops) {
        apply_primitive_left(op, u);
    }
    return u;
}

Unitary permutation_matrix(const Permutation& perm) {
    const std::size_t size = perm.table.size();
    int lines = 0;
    while ((std::size_t{1} << lines) < size) {
        ++lines;
    }
    if ((std::size_t{1} << lines) != size) {
        throw std::invalid_argument("permutation size " + std::to_string(size) +
                                    " is not a power of two");
    }
    Unitary u(lines);
    for (std::size_t x = 0; x < size; ++x) {
        u.at(perm.table[x], x) = Unitary::Complex{1.0, 0.0};
    }
    return u;
}

PrimitiveSeq decompose(GateKind kind) {
    // Standard controlled-V network for TOFFOLI(a,b,c) on lines (0,1,2).
    const std::vector<Primitive> toffoli = {cv(1, 2), cnot(0, 1), cvdag(1, 2), cnot(0, 1),
                                            cv(0, 2)};
    switch (kind) {
        case GateKind::NOT:
            return {1, {not_on(0)}};
        case GateKind::FG:
            return {2, {cnot(0, 1)}};
        case GateKind::TOFFOLI:
            return {3, toffoli};
        case GateKind::PERES:
            return {3, {cv(0, 2), cv(1, 2), cnot(0, 1), cvdag(1, 2)}};
        case GateKind::FREDKIN: {
            PrimitiveSeq seq{3, {cnot(2, 1)}};
            seq.ops.insert(seq.ops.end(), toffoli.begin(), toffoli.end());
            seq.ops.push_back(cnot(2, 1));
            return seq;
        }
        case GateKind::TR: {
            PrimitiveSeq seq{3, {not_on(1)}};
            seq.ops.insert(seq.ops.end(), toffoli.begin(), toffoli.end());
            seq.ops.push_back(not_on(1));
            seq.ops.push_back(cnot(0, 1));
            return seq;
        }
    }
    throw std::invalid_argument("unknown gate kind");
}

int grouped_cost(const PrimitiveSeq& seq) {
    int cost = 0;
    int pair_lo = -1, pair_hi = -1;  // current group's unordered line pair
    for (const auto& op : seq.ops) {
        check_primitive(op, seq.line_count);
        if (op.kind == PrimitiveKind::Not) {
            if (pair_lo >= 0 && op.target != pair_lo && op.target != pair_hi) {
                pair_lo = pair_hi = -1;
            }
            continue;
        }
        const int lo = std::min(op.control, op.target);
        const int hi = std::max(op.control, op.target);
        if (lo != pair_lo || hi != pair_hi) {
            ++cost;
            pair_lo = lo;
            pair_hi = hi;
        }
    }
    return cost;
}

DecompositionReport verify_decomposition(GateKind kind) {
    DecompositionReport report;
    report.kind = kind;
    report.seq = decompose(kind);
    report.max_error =
        sequence_unitary(report.seq).max_abs_diff(permutation_matrix(gate_permutation(kind)));
    report.unitary_match = report.max_error <= kDecompositionTolerance;
    report.computed_cost = grouped_cost(report.seq);
    report.catalog_cost = gate_spec(kind).quantum_cost;
    return report;
}

namespace {

// Fixed search alphabet on 3 lines: kind-major (CNOT, CV, CV+), then control,
// then target. 18 primitives; the DFS below enumerates sequences in
// lexicographic order over this alphabet.
std::vector<Primitive> search_alphabet() {
    std::vector<Primitive> alphabet;
    for (const PrimitiveKind kind :
         {PrimitiveKind::Cnot, PrimitiveKind::V, PrimitiveKind::Vdag}) {
        for (int control = 0; control < 3; ++control) {
            for (int target = 0; target < 3; ++target) {
                if (control != target) {
                    alphabet.push_back({kind, control, target});
                }
            }
        }
    }
    return alphabet;
}

// Fail-fast comparison for the search hot path: squared magnitudes, bail on
// the first entry past tolerance.
bool close_enough(const Unitary& a, const Unitary& b, double tol) {
    const double tol2 = tol * tol;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (std::norm(a.at(i, j) - b.at(i, j)) > tol2) {
                return false;
            }
        }
    }
    return true;
}

bool search_at_depth(const std::vector<Primitive>& alphabet, const Unitary& goal,
                     int remaining, const Unitary& product, std::vector<Primitive>& stack) {
    if (remaining == 0) {
        return close_enough(product, goal, kDecompositionTolerance);
    }
    for (const auto& op : alphabet) {
        Unitary next = product;
        apply_primitive_left(op, next);
        stack.push_back(op);
        if (search_at_depth(alphabet, goal, remaining - 1, next, stack)) {
            return true;
        }
        stack.pop_back();
    }
    return false;
}

}  // namespace

std::optional<PrimitiveSeq> search_decomposition(GateKind kind, int max_len) {
    if (gate_spec(kind).arity != 3) {
        throw std::invalid_argument(std::string(gate_spec(kind).name) +
                                    " is not a three-line gate");
    }
    if (max_len < 0 || max_len > 6) {
        throw std::invalid_argument("max_len must be in [0, 6], got " +
                                    std::to_string(max_len));
    }
    const auto alphabet = search_alphabet();
    const Unitary goal = permutation_matrix(gate_permutation(kind));
    const Unitary start = Unitary::identity(3);
    for (int length = 0; length <= max_len; ++length) {
        std::vector<Primitive> stack;
        stack.reserve(static_cast<std::size_t>(length));
        if (search_at_depth(alphabet, goal, length, start, stack)) {
            return PrimitiveSeq{3, stack};
        }
    }
    return std::nullopt;
}

}  // namespace revarith
