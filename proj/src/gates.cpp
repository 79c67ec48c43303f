#include "revarith/gates.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace revarith {

namespace {

struct Outs {
    std::uint8_t p, q, r;
};

using BitFn = Outs (*)(std::uint8_t a, std::uint8_t b, std::uint8_t c);

constexpr Outs not_fn(std::uint8_t a, std::uint8_t, std::uint8_t) {
    return {static_cast<std::uint8_t>(a ^ 1u), 0, 0};
}
constexpr Outs fg_fn(std::uint8_t a, std::uint8_t b, std::uint8_t) {
    return {a, static_cast<std::uint8_t>(a ^ b), 0};
}
constexpr Outs toffoli_fn(std::uint8_t a, std::uint8_t b, std::uint8_t c) {
    return {a, b, static_cast<std::uint8_t>(c ^ (a & b))};
}
constexpr Outs peres_fn(std::uint8_t a, std::uint8_t b, std::uint8_t c) {
    return {a, static_cast<std::uint8_t>(a ^ b), static_cast<std::uint8_t>(c ^ (a & b))};
}
constexpr Outs fredkin_fn(std::uint8_t a, std::uint8_t b, std::uint8_t c) {
    // Q = A'B + AC, R = AB + A'C: swap the last two lines when A is set.
    return a ? Outs{a, c, b} : Outs{a, b, c};
}
constexpr Outs tr_fn(std::uint8_t a, std::uint8_t b, std::uint8_t c) {
    return {a, static_cast<std::uint8_t>(a ^ b),
            static_cast<std::uint8_t>(c ^ (a & (b ^ 1u)))};
}

constexpr std::array<std::uint8_t, 8> make_truth(int arity, BitFn fn) {
    std::array<std::uint8_t, 8> t{};
    for (unsigned x = 0; x < (1u << arity); ++x) {
        const auto out = fn(x & 1u, (x >> 1) & 1u, (x >> 2) & 1u);
        const std::uint8_t bits[3] = {out.p, out.q, out.r};
        unsigned y = 0;
        for (int k = 0; k < arity; ++k) {
            y |= static_cast<unsigned>(bits[k]) << k;
        }
        t[x] = static_cast<std::uint8_t>(y);
    }
    return t;
}

constexpr std::array<GateSpec, 6> kCatalog{{
    {GateKind::NOT, "NOT", "NOT", 1, 0, "P=A'", make_truth(1, not_fn)},
    {GateKind::FG, "FEYNMAN", "FG", 2, 1, "P=A Q=A^B", make_truth(2, fg_fn)},
    {GateKind::TOFFOLI, "TOFFOLI", "TOF", 3, 5, "P=A Q=B R=AB^C", make_truth(3, toffoli_fn)},
    {GateKind::PERES, "PERES", "PG", 3, 4, "P=A Q=A^B R=AB^C", make_truth(3, peres_fn)},
    {GateKind::FREDKIN, "FREDKIN", "F", 3, 5, "P=A Q=A'B+AC R=AB+A'C", make_truth(3, fredkin_fn)},
    {GateKind::TR, "TR", "TR", 3, 6, "P=A Q=A^B R=AB'^C", make_truth(3, tr_fn)},
}};

}  // namespace

bool Permutation::is_bijection() const {
    std::vector<bool> seen(table.size(), false);
    for (const auto image : table) {
        if (image >= table.size() || seen[image]) {
            return false;
        }
        seen[image] = true;
    }
    return true;
}

const GateSpec& gate_spec(GateKind kind) {
    return kCatalog[static_cast<std::size_t>(kind)];
}

std::optional<GateKind> gate_from_name(std::string_view token) {
    for (const auto& spec : kCatalog) {
        if (token == spec.mnemonic || token == spec.name) {
            return spec.kind;
        }
    }
    // Common synonyms accepted on input; never emitted.
    if (token == "CNOT") return GateKind::FG;
    if (token == "TG") return GateKind::TOFFOLI;
    return std::nullopt;
}

unsigned apply_gate_packed(GateKind kind, unsigned input) {
    return gate_spec(kind).truth[input];
}

std::vector<int> apply_gate(GateKind kind, const std::vector<int>& input) {
    const auto& spec = gate_spec(kind);
    if (static_cast<int>(input.size()) != spec.arity) {
        throw std::invalid_argument(std::string(spec.name) + " expects " +
                                    std::to_string(spec.arity) + " bits, got " +
                                    std::to_string(input.size()));
    }
    unsigned x = 0;
    for (int k = 0; k < spec.arity; ++k) {
        if (input[k] != 0 && input[k] != 1) {
            throw std::invalid_argument("input bits must be 0 or 1");
        }
        x |= static_cast<unsigned>(input[k]) << k;
    }
    const unsigned y = spec.truth[x];
    std::vector<int> out(spec.arity);
    for (int k = 0; k < spec.arity; ++k) {
        out[k] = static_cast<int>((y >> k) & 1u);
    }
    return out;
}

Permutation gate_permutation(GateKind kind) {
    const auto& spec = gate_spec(kind);
    Permutation perm;
    perm.table.resize(std::size_t{1} << spec.arity);
    for (std::size_t x = 0; x < perm.table.size(); ++x) {
        perm.table[x] = spec.truth[x];
    }
    return perm;
}

}  // namespace revarith
