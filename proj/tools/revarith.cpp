#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "revarith/designs.hpp"
#include "revarith/netlist_io.hpp"
#include "revarith/paper_data.hpp"
#include "revarith/quantum.hpp"
#include "revarith/report.hpp"
#include "revarith/simulate.hpp"

namespace {

using namespace revarith;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::string upper(std::string s) {
    for (char& c : s) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return s;
}

GateKind gate_arg(const std::string& token) {
    if (const auto kind = gate_from_name(upper(token))) {
        return *kind;
    }
    throw std::invalid_argument("unknown gate '" + token + "'");
}

DesignId design_arg(int number) {
    if (const auto d = design_from_number(number)) {
        return *d;
    }
    throw std::invalid_argument("design must be 1, 2 or 3, got " + std::to_string(number));
}

Mode mode_arg(const std::string& token) {
    if (token == "add") return Mode::Add;
    if (token == "sub") return Mode::Sub;
    throw std::invalid_argument("mode must be 'add' or 'sub', got '" + token + "'");
}

/// Recovers the design from a generated circuit name such as "d3_ripple8".
std::optional<DesignId> infer_design(const std::string& circuit_name) {
    if (circuit_name.size() >= 2 && circuit_name[0] == 'd' &&
        (circuit_name.size() == 2 || circuit_name[2] == '_')) {
        return design_from_number(circuit_name[1] - '0');
    }
    return std::nullopt;
}

int cmd_gates(bool tsv) {
    std::ostringstream out;
    if (!tsv) {
        out << "gate     mnemonic  lines  qcost  mapping\n";
    }
    for (const GateKind kind : all_gate_kinds) {
        const GateSpec& spec = gate_spec(kind);
        if (tsv) {
            out << spec.name << "\t" << spec.mnemonic << "\t" << spec.arity << "\t"
                << spec.quantum_cost << "\t" << spec.formula << "\n";
        } else {
            char line[128];
            std::snprintf(line, sizeof(line), "%-8s %-9s %-6d %-6d %s\n",
                          std::string(spec.name).c_str(), std::string(spec.mnemonic).c_str(),
                          spec.arity, spec.quantum_cost, std::string(spec.formula).c_str());
            out << line;
        }
    }
    std::cout << out.str();
    return kExitOk;
}

int cmd_truth(const std::string& gate_name, bool tsv) {
    const GateKind kind = gate_arg(gate_name);
    const GateSpec& spec = gate_spec(kind);
    static constexpr char kIn[3] = {'A', 'B', 'C'};
    static constexpr char kOut[3] = {'P', 'Q', 'R'};
    std::ostringstream out;
    if (!tsv) {
        out << spec.name << " (" << spec.mnemonic << "), " << spec.arity
            << (spec.arity == 1 ? " line" : " lines") << ", quantum cost "
            << spec.quantum_cost << "\n"
            << spec.formula << "\n";
        for (int k = 0; k < spec.arity; ++k) out << kIn[k] << " ";
        out << "|";
        for (int k = 0; k < spec.arity; ++k) out << " " << kOut[k];
        out << "\n";
    }
    for (unsigned x = 0; x < (1u << spec.arity); ++x) {
        const unsigned y = apply_gate_packed(kind, x);
        std::vector<int> bits;
        for (int k = 0; k < spec.arity; ++k) bits.push_back((x >> k) & 1u);
        for (int k = 0; k < spec.arity; ++k) bits.push_back((y >> k) & 1u);
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (tsv) {
                out << bits[i] << (i + 1 < bits.size() ? "\t" : "\n");
            } else {
                const bool at_bar = i == static_cast<std::size_t>(spec.arity);
                if (at_bar) out << "| ";
                out << bits[i] << (i + 1 < bits.size() ? " " : "\n");
            }
        }
    }
    std::cout << out.str();
    return kExitOk;
}

int cmd_build(int design_number_arg, int width, const std::string& unit,
              const std::string& out_path) {
    const DesignId d = design_arg(design_number_arg);
    Circuit circuit;
    if (unit == "half") {
        circuit = build_half(d);
    } else if (unit == "full") {
        circuit = build_full(d);
    } else if (unit == "ripple") {
        circuit = build_ripple(d, width);
    } else {
        throw std::invalid_argument("unit must be half, full or ripple, got '" + unit + "'");
    }
    if (out_path == "-") {
        std::cout << serialize(circuit);
    } else {
        save_netlist(out_path, circuit);
        std::cout << "wrote " << out_path << ": " << circuit.name << ", "
                  << circuit.lines.size() << " lines, " << circuit.gates.size()
                  << " gates\n";
    }
    return kExitOk;
}

int cmd_sim(const std::string& file, const std::vector<std::string>& set_args,
            const std::string& mode_token, bool tsv) {
    const Circuit circuit = load_netlist(file);
    Assignment assignment;
    for (const std::string& chunk : set_args) {
        std::stringstream items(chunk);
        std::string item;
        while (std::getline(items, item, ',')) {
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size()) {
                throw std::invalid_argument("bad --set entry '" + item +
                                            "', expected name=bit");
            }
            const std::string name = item.substr(0, eq);
            const std::string value = item.substr(eq + 1);
            if (value != "0" && value != "1") {
                throw std::invalid_argument("bad bit for '" + name + "': " + value);
            }
            if (!assignment.emplace(name, value == "1" ? 1 : 0).second) {
                throw std::invalid_argument("duplicate --set entry for '" + name + "'");
            }
        }
    }
    if (!mode_token.empty()) {
        const Mode mode = mode_arg(mode_token);
        const auto d = infer_design(circuit.name);
        if (!d) {
            throw std::invalid_argument(
                "cannot infer the design from circuit name '" + circuit.name +
                "'; set the control bit explicitly with --set ctrl=0|1");
        }
        const int ctrl = mode_to_ctrl(*d).at(mode);
        if (!assignment.emplace("ctrl", ctrl).second) {
            throw std::invalid_argument("--mode conflicts with an explicit ctrl in --set");
        }
    }
    const std::vector<int> values = evaluate(circuit, assignment);
    std::ostringstream out;
    for (std::size_t i = 0; i < circuit.lines.size(); ++i) {
        const auto& output = circuit.lines[i].output;
        if (!output.is_garbage) {
            if (tsv) {
                out << output.name << "\t" << values[i] << "\n";
            } else {
                out << output.name << "=" << values[i] << "\n";
            }
        }
    }
    std::cout << out.str();
    return kExitOk;
}

struct Mismatch {
    Mode mode;
    std::uint64_t a;
    std::uint64_t b;
    AddSubResult got;
    AddSubResult want;
};

/// Sweeps `count` vectors indexed [0, count) through `probe`, split across
/// `jobs` workers. Returns the total mismatch count and the lowest-indexed
/// examples (deterministic regardless of the worker split).
template <typename Probe>
std::pair<long long, std::vector<Mismatch>> sweep(std::uint64_t count, int jobs,
                                                  const Probe& probe) {
    const int workers = std::max(1, jobs);
    std::atomic<long long> total{0};
    std::mutex merge_mutex;
    std::vector<std::pair<std::uint64_t, Mismatch>> found;

    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        long long local_total = 0;
        std::vector<std::pair<std::uint64_t, Mismatch>> local;
        for (std::uint64_t index = begin; index < end; ++index) {
            if (auto miss = probe(index)) {
                ++local_total;
                if (local.size() < 5) {
                    local.emplace_back(index, *miss);
                }
            }
        }
        total += local_total;
        const std::lock_guard<std::mutex> lock(merge_mutex);
        found.insert(found.end(), local.begin(), local.end());
    };

    if (workers == 1) {
        run_range(0, count);
    } else {
        std::vector<std::thread> threads;
        const std::uint64_t chunk = (count + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min(count, w * chunk);
            const std::uint64_t end = std::min(count, begin + chunk);
            if (begin < end) {
                threads.emplace_back(run_range, begin, end);
            }
        }
        for (std::thread& t : threads) {
            t.join();
        }
    }

    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Mismatch> examples;
    for (std::size_t i = 0; i < found.size() && i < 5; ++i) {
        examples.push_back(found[i].second);
    }
    return {total.load(), examples};
}

int cmd_verify(int design_number_arg, int width, bool exhaustive, long long samples,
               std::uint64_t seed, int jobs, bool samples_given, bool exhaustive_given) {
    const DesignId d = design_arg(design_number_arg);
    const Circuit circuit = build_ripple(d, width);
    const AddSubPorts ports = AddSubPorts::resolve(circuit);
    const std::uint64_t mask =
        width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;

    if (!exhaustive_given && !samples_given) {
        exhaustive = width <= 9;  // default: exhaustive while 4^width stays small
    }
    if (exhaustive && width > 16) {
        throw std::invalid_argument(
            "exhaustive verification is limited to width <= 16; use --samples");
    }

    std::ostringstream header;
    std::uint64_t count = 0;
    std::vector<std::pair<Mode, std::pair<std::uint64_t, std::uint64_t>>> sample_list;
    if (exhaustive) {
        count = std::uint64_t{2} << (2 * width);  // both modes x all (a, b)
        header << "verify: design " << design_number(d) << ", width " << width
               << ", exhaustive\n";
    } else {
        std::mt19937_64 rng(seed);
        for (const Mode mode : {Mode::Add, Mode::Sub}) {
            for (long long k = 0; k < samples; ++k) {
                sample_list.push_back({mode, {rng() & mask, rng() & mask}});
            }
        }
        count = sample_list.size();
        header << "verify: design " << design_number(d) << ", width " << width
               << ", sampled, " << samples << " vectors per mode, seed " << seed << "\n";
    }

    // Per-thread circuit copies are unnecessary (runs share only immutable
    // data), but each probe call builds its own line state.
    auto probe = [&](std::uint64_t index) -> std::optional<Mismatch> {
        Mode mode;
        std::uint64_t a, b;
        if (exhaustive) {
            mode = (index >> (2 * width)) ? Mode::Sub : Mode::Add;
            a = index & mask;
            b = (index >> width) & mask;
        } else {
            const auto& sample = sample_list[index];
            mode = sample.first;
            a = sample.second.first;
            b = sample.second.second;
        }
        const AddSubResult got = run_addsub(circuit, ports, d, mode, a, b);
        const AddSubResult want = addsub_oracle(width, mode, a, b);
        if (got == want) {
            return std::nullopt;
        }
        return Mismatch{mode, a, b, got, want};
    };

    const auto [mismatches, examples] = sweep(count, jobs, probe);

    std::cout << header.str();
    for (const Mismatch& m : examples) {
        std::cout << "mismatch: mode=" << mode_name(m.mode) << " a=" << m.a << " b=" << m.b
                  << " got value=" << m.got.value << " flag=" << m.got.flag
                  << " want value=" << m.want.value << " flag=" << m.want.flag << "\n";
    }
    std::cout << "checked " << count << " vectors: " << mismatches << " mismatches\n";
    std::cout << (mismatches == 0 ? "ok" : "FAIL") << "\n";
    return mismatches == 0 ? kExitOk : kExitVerifyFail;
}

int cmd_metrics(int design_number_arg, int width, bool as_built, bool tsv) {
    const DesignId d = design_arg(design_number_arg);
    const Metrics metrics =
        as_built ? compute_metrics(build_ripple(d, width)) : ripple_metrics_paper(d, width);
    std::ostringstream out;
    const std::string accounting = as_built ? "as built" : "paper accounting";
    if (tsv) {
        out << "design\t" << design_number(d) << "\n"
            << "width\t" << width << "\n"
            << "accounting\t" << accounting << "\n";
        for (const MetricField field : all_metric_fields) {
            out << metric_label(field) << "\t" << metric_value(metrics, field) << "\n";
        }
    } else {
        out << "design " << design_number(d) << ", width " << width << ", " << accounting
            << "\n";
        for (const MetricField field : all_metric_fields) {
            char line[64];
            std::snprintf(line, sizeof(line), "%-16s %d\n",
                          std::string(metric_label(field)).c_str(),
                          metric_value(metrics, field));
            out << line;
        }
    }
    std::cout << out.str();
    return kExitOk;
}

int cmd_decompose(const std::string& gate_name) {
    const GateKind kind = gate_arg(gate_name);
    const DecompositionReport report = verify_decomposition(kind);
    std::ostringstream out;
    out << gate_spec(kind).name << " lowering (" << report.seq.ops.size()
        << (report.seq.ops.size() == 1 ? " primitive" : " primitives") << "):\n";
    for (const Primitive& op : report.seq.ops) {
        out << "  " << to_string(op) << "\n";
    }
    char error_line[64];
    std::snprintf(error_line, sizeof(error_line), "%.1e", report.max_error);
    out << "unitary match: " << (report.unitary_match ? "yes" : "NO") << " (max error "
        << error_line << ")\n";
    out << "grouped cost " << report.computed_cost << ", catalog cost "
        << report.catalog_cost;
    if (report.computed_cost != report.catalog_cost) {
        out << " (MISMATCH; the catalog value stays authoritative for metrics)";
    }
    out << "\n";
    std::cout << out.str();
    return report.unitary_match ? kExitOk : kExitVerifyFail;
}

int cmd_search(const std::string& gate_name, int max_len) {
    const GateKind kind = gate_arg(gate_name);
    const auto found = search_decomposition(kind, max_len);
    std::ostringstream out;
    out << "search " << gate_spec(kind).name << " max len " << max_len << ": ";
    if (!found) {
        out << "none (exhausted all sequences up to length " << max_len << ")\n";
        std::cout << out.str();
        return kExitOk;
    }
    out << "found length " << found->ops.size() << "\n";
    for (const Primitive& op : found->ops) {
        out << "  " << to_string(op) << "\n";
    }
    const bool verified =
        sequence_unitary(*found).approx_equal(permutation_matrix(gate_permutation(kind)),
                                              kDecompositionTolerance);
    out << (verified ? "verified: unitary matches\n" : "verification FAILED\n");
    std::cout << out.str();
    return verified ? kExitOk : kExitVerifyFail;
}

int cmd_equiv(const std::string& file1, const std::string& file2) {
    const Circuit lhs = load_netlist(file1);
    const Circuit rhs = load_netlist(file2);
    if (equivalent(lhs, rhs)) {
        std::cout << "equivalent\n";
        return kExitOk;
    }
    std::cout << "NOT equivalent\n";
    return kExitVerifyFail;
}

int cmd_compare(bool tsv) {
    const ComparisonReport report = paper_compare();
    std::cout << render_comparison(report, tsv);
    return report.ok() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reversible ripple adder/subtractor circuit kit"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --jobs / --tsv appear after the subcommand
    int jobs = 1;
    bool tsv = false;
    app.add_option("--jobs", jobs, "worker threads for verification sweeps")
        ->check(CLI::PositiveNumber);
    app.add_flag("--tsv", tsv, "tab-separated output");

    auto* gates_cmd = app.add_subcommand("gates", "list the gate catalog");

    std::string truth_gate;
    auto* truth_cmd = app.add_subcommand("truth", "print a gate's truth table");
    truth_cmd->add_option("gate", truth_gate, "gate name or mnemonic")->required();

    int build_design = 0, build_width = 8;
    std::string build_unit = "ripple", build_out;
    auto* build_cmd = app.add_subcommand("build", "generate a circuit file");
    build_cmd->add_option("--design", build_design, "design number (1, 2 or 3)")->required();
    build_cmd->add_option("--width", build_width, "ripple width in bits (default 8)");
    build_cmd->add_option("--unit", build_unit, "half, full or ripple (default ripple)");
    build_cmd->add_option("--out", build_out, "output path, or - for stdout")->required();

    std::string sim_file, sim_mode;
    std::vector<std::string> sim_sets;
    auto* sim_cmd = app.add_subcommand("sim", "simulate one input vector");
    sim_cmd->add_option("--file", sim_file, "netlist file")->required();
    sim_cmd->add_option("--set", sim_sets, "input bits, e.g. A0=1,B0=0");
    sim_cmd->add_option("--mode", sim_mode, "add or sub (sets ctrl per the design)");

    int verify_design = 0, verify_width = 8;
    long long verify_samples = 10000;
    std::uint64_t verify_seed = 1;
    bool verify_exhaustive = false;
    auto* verify_cmd = app.add_subcommand("verify", "check a ripple circuit against the oracle");
    verify_cmd->add_option("--design", verify_design, "design number (1, 2 or 3)")->required();
    verify_cmd->add_option("--width", verify_width, "ripple width in bits")->required();
    auto* exhaustive_opt =
        verify_cmd->add_flag("--exhaustive", verify_exhaustive, "sweep all inputs");
    auto* samples_opt = verify_cmd->add_option("--samples", verify_samples,
                                               "random vectors per mode (default 10000)");
    verify_cmd->add_option("--seed", verify_seed, "random seed (default 1)");
    samples_opt->excludes(exhaustive_opt);

    int metrics_design = 0, metrics_width = 8;
    bool metrics_paper = false, metrics_as_built = false;
    auto* metrics_cmd = app.add_subcommand("metrics", "print circuit metrics");
    metrics_cmd->add_option("--design", metrics_design, "design number (1, 2 or 3)")
        ->required();
    metrics_cmd->add_option("--width", metrics_width, "ripple width in bits")->required();
    auto* paper_opt = metrics_cmd->add_flag("--paper-accounting", metrics_paper,
                                            "unit-wise sums (default)");
    metrics_cmd->add_flag("--as-built", metrics_as_built, "count the fused netlist")
        ->excludes(paper_opt);

    std::string decompose_gate;
    auto* decompose_cmd =
        app.add_subcommand("decompose", "print and check a gate's primitive lowering");
    decompose_cmd->add_option("gate", decompose_gate, "gate name or mnemonic")->required();

    std::string search_gate;
    int search_max_len = 5;
    auto* search_cmd =
        app.add_subcommand("search", "brute-force a primitive sequence for a gate");
    search_cmd->add_option("gate", search_gate, "three-line gate name")->required();
    search_cmd->add_option("--max-len", search_max_len, "maximum sequence length (<= 6)")
        ->required();

    std::string equiv_file1, equiv_file2;
    auto* equiv_cmd = app.add_subcommand("equiv", "compare two circuits exhaustively");
    equiv_cmd->add_option("file1", equiv_file1, "first netlist")->required();
    equiv_cmd->add_option("file2", equiv_file2, "second netlist")->required();

    bool compare_paper = false;
    auto* compare_cmd =
        app.add_subcommand("compare", "reproduce the published comparison tables");
    compare_cmd->add_flag("--paper", compare_paper, "compare against the embedded dataset")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gates_cmd->parsed()) return cmd_gates(tsv);
        if (truth_cmd->parsed()) return cmd_truth(truth_gate, tsv);
        if (build_cmd->parsed())
            return cmd_build(build_design, build_width, build_unit, build_out);
        if (sim_cmd->parsed()) return cmd_sim(sim_file, sim_sets, sim_mode, tsv);
        if (verify_cmd->parsed())
            return cmd_verify(verify_design, verify_width, verify_exhaustive, verify_samples,
                              verify_seed, jobs, samples_opt->count() > 0,
                              exhaustive_opt->count() > 0);
        if (metrics_cmd->parsed())
            return cmd_metrics(metrics_design, metrics_width, metrics_as_built, tsv);
        if (decompose_cmd->parsed()) return cmd_decompose(decompose_gate);
        if (search_cmd->parsed()) return cmd_search(search_gate, search_max_len);
        if (equiv_cmd->parsed()) return cmd_equiv(equiv_file1, equiv_file2);
        if (compare_cmd->parsed()) return cmd_compare(tsv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
