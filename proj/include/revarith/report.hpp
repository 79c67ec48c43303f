#pragma once

#include "revarith/paper_data.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace revarith {

/// Accepted deviation between a recomputed improvement percentage and the
/// published figure, in percentage points. Wide enough to absorb the
/// published rounding (the full-unit garbage-output claim of 65 against a
/// recomputed 66.67 is the worst case), tight enough to catch real errors.
inline constexpr double kImprovementTolerance = 2.0;

int metric_value(const Metrics& m, MetricField field);
std::string_view metric_label(MetricField field);

/// 100 * (old_value - new_value) / new_value, rounded to two decimals.
/// Throws std::invalid_argument when new_value <= 0.
double improvement(double old_value, double new_value);

/// One design within one scope: recomputed metrics next to the published
/// row. Reproduction succeeds when every field is exactly equal.
struct ComparisonRow {
    std::string_view scope;  ///< "half unit", "full unit" or "8-bit"
    DesignId design;
    Metrics computed;
    Metrics reference;
    std::string_view source;

    bool matches() const { return computed == reference; }
};

/// One published improvement claim next to its recomputation from the
/// table values.
struct ImprovementRow {
    std::string_view scope;
    MetricField field;
    DesignId from;
    DesignId to;
    double computed;
    double stated;
    std::string_view source;

    bool within_tolerance() const {
        return std::fabs(computed - stated) <= kImprovementTolerance;
    }
};

struct ComparisonReport {
    int dataset_version = kReferenceDataVersion;
    std::vector<ComparisonRow> rows;
    std::vector<ImprovementRow> improvements;

    /// Every metric row equal and every percentage within tolerance.
    bool ok() const;
};

/// Builds all six units and the three 8-bit chains, computes unit-wise
/// accounting metrics, and compares them with the embedded reference rows
/// and improvement claims.
ComparisonReport paper_compare();

/// Deterministic text rendering: aligned human-readable table, or
/// tab-separated lines when `tsv` is set.
std::string render_comparison(const ComparisonReport& report, bool tsv);

}  // namespace revarith
