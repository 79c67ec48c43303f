#include "revarith/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace revarith {

namespace {

std::string design_name(DesignId d) { return "D" + std::to_string(design_number(d)); }

std::string pad(std::string text, std::size_t width) {
    if (text.size() < width) {
        text.append(width - text.size(), ' ');
    }
    return text;
}

std::string fixed2(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

Metrics scope_metrics(std::string_view scope, DesignId d) {
    if (scope == "half unit") {
        return compute_metrics(build_half(d));
    }
    if (scope == "full unit") {
        return compute_metrics(build_full(d));
    }
    return ripple_metrics_paper(d, 8);
}

}  // namespace

int metric_value(const Metrics& m, MetricField field) {
    switch (field) {
        case MetricField::GateCount: return m.gate_count;
        case MetricField::GarbageInputs: return m.garbage_inputs;
        case MetricField::GarbageOutputs: return m.garbage_outputs;
        case MetricField::QuantumCost: return m.quantum_cost;
    }
    throw std::invalid_argument("unknown metric field");
}

std::string_view metric_label(MetricField field) {
    switch (field) {
        case MetricField::GateCount: return "gate count";
        case MetricField::GarbageInputs: return "garbage inputs";
        case MetricField::GarbageOutputs: return "garbage outputs";
        case MetricField::QuantumCost: return "quantum cost";
    }
    throw std::invalid_argument("unknown metric field");
}

double improvement(double old_value, double new_value) {
    if (!(new_value > 0)) {
        throw std::invalid_argument("improvement requires a positive new value");
    }
    const double percent = 100.0 * (old_value - new_value) / new_value;
    return std::round(percent * 100.0) / 100.0;
}

bool ComparisonReport::ok() const {
    for (const auto& row : rows) {
        if (!row.matches()) {
            return false;
        }
    }
    for (const auto& row : improvements) {
        if (!row.within_tolerance()) {
            return false;
        }
    }
    return true;
}

ComparisonReport paper_compare() {
    ComparisonReport report;

    const struct {
        std::string_view scope;
        const std::array<ReferenceRow, 3>& table;
    } sections[] = {
        {"half unit", kReferenceHalfUnit},
        {"full unit", kReferenceFullUnit},
        {"8-bit", kReferenceEightBit},
    };
    for (const auto& section : sections) {
        for (const auto& ref : section.table) {
            report.rows.push_back({section.scope, ref.design,
                                   scope_metrics(section.scope, ref.design), ref.metrics,
                                   ref.source});
        }
    }

    for (const auto& claim : kReferenceImprovements) {
        const Metrics old_metrics = scope_metrics(claim.scope, claim.from);
        const Metrics new_metrics = scope_metrics(claim.scope, claim.to);
        const double computed =
            improvement(metric_value(old_metrics, claim.field),
                        metric_value(new_metrics, claim.field));
        report.improvements.push_back({claim.scope, claim.field, claim.from, claim.to,
                                       computed, claim.stated, claim.source});
    }
    return report;
}

std::string render_comparison(const ComparisonReport& report, bool tsv) {
    std::ostringstream out;
    if (tsv) {
        out << "dataset_version\t" << report.dataset_version << "\n";
        for (const auto& row : report.rows) {
            for (const MetricField field : all_metric_fields) {
                out << "metric\t" << row.scope << "\t" << design_name(row.design) << "\t"
                    << metric_label(field) << "\t" << metric_value(row.computed, field)
                    << "\t" << metric_value(row.reference, field) << "\t"
                    << (metric_value(row.computed, field) ==
                                metric_value(row.reference, field)
                            ? "ok"
                            : "mismatch")
                    << "\n";
            }
        }
        for (const auto& row : report.improvements) {
            out << "improvement\t" << row.scope << "\t" << metric_label(row.field) << "\t"
                << design_name(row.from) << "\t" << design_name(row.to) << "\t"
                << fixed2(row.computed) << "\t" << fixed2(row.stated) << "\t"
                << (row.within_tolerance() ? "ok" : "out-of-tolerance") << "\n";
        }
        out << "result\t" << (report.ok() ? "ok" : "mismatch") << "\n";
        return out.str();
    }

    out << "reference comparison, dataset v" << report.dataset_version << "\n\n";

    out << "metrics (computed/reference)\n";
    out << pad("scope", 11) << pad("design", 8) << pad("gates", 9) << pad("g_in", 9)
        << pad("g_out", 9) << pad("qcost", 10) << pad("status", 10) << "source\n";
    for (const auto& row : report.rows) {
        auto cell = [&](MetricField field) {
            return std::to_string(metric_value(row.computed, field)) + "/" +
                   std::to_string(metric_value(row.reference, field));
        };
        out << pad(std::string(row.scope), 11) << pad(design_name(row.design), 8)
            << pad(cell(MetricField::GateCount), 9)
            << pad(cell(MetricField::GarbageInputs), 9)
            << pad(cell(MetricField::GarbageOutputs), 9)
            << pad(cell(MetricField::QuantumCost), 10)
            << pad(row.matches() ? "ok" : "MISMATCH", 10) << row.source << "\n";
    }

    bool any_rounding_note = false;
    out << "\nimprovements, percent (computed vs stated)\n";
    out << pad("scope", 11) << pad("quantity", 17) << pad("pair", 9)
        << pad("computed", 10) << pad("stated", 9) << "status\n";
    for (const auto& row : report.improvements) {
        const bool same_to_cents = std::fabs(row.computed - row.stated) < 0.005;
        std::string status;
        if (!row.within_tolerance()) {
            status = "OUT OF TOLERANCE";
        } else if (same_to_cents) {
            status = "ok";
        } else {
            status = "ok*";
            any_rounding_note = true;
        }
        out << pad(std::string(row.scope), 11) << pad(std::string(metric_label(row.field)), 17)
            << pad(design_name(row.from) + "->" + design_name(row.to), 9)
            << pad(fixed2(row.computed), 10) << pad(fixed2(row.stated), 9) << status
            << "\n";
    }
    if (any_rounding_note) {
        out << "* differs from the published figure (published rounding); within "
            << fixed2(kImprovementTolerance) << " points\n";
    }
    out << "\nresult: " << (report.ok() ? "ok" : "MISMATCH") << "\n";
    return out.str();
}

}  // namespace revarith
