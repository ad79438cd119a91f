#pragma once

// Human- and machine-readable renderings of checks, volume reports, parameter
// sweeps and divisor polytopes. Rationals are always written as "p/q".

#include "toricvol/document.hpp"
#include "toricvol/volume.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toricvol {

struct CheckResult {
    bool fan_valid = false;
    std::vector<FanViolation> fan_violations;
    bool globally_generated = false;
    std::vector<PositivityWitness> generation_violations;
    bool ample = false;
    std::vector<PositivityWitness> ampleness_violations;

    /// "fan: valid", "globally generated: ...", "ample: ..." lines.
    std::string text() const;
};

/// Divisor length mismatches are reported like fan violations.
CheckResult check_instance(const InstanceDocument& doc);

enum class ReportFormat { Text, Json, Csv };

/// Accepts "text", "json" and "csv"; throws InvalidArgument otherwise.
ReportFormat parse_report_format(std::string_view name);

std::string format_report(const VolumeReport& report, ReportFormat format);

struct IntRange {
    Integer first;
    Integer last;
};

/// Parses "N" or "A..B"; throws InvalidArgument for malformed or empty ranges.
IntRange parse_range(std::string_view text);

struct SweepRow {
    Integer l, a, b;
    bool ample = false;
    Rational area;
    Integer dsq;
    Rational simplex_sum;
    Rational symbol_sum;  // half the symbol intersection number
    bool agree = false;
};

/// One row per (l, a, b = l*a + extra), sorted by (l, a, b). Rows are
/// computed concurrently. Throws InvalidArgument for empty ranges or l < 1.
std::vector<SweepRow> hirzebruch_sweep(const IntRange& l, const IntRange& a, const IntRange& extra,
                                       const DecompositionVariant& variant = {});

/// Header "l,a,b,area,dsq,simplex_sum,symbol_sum,agree" then one line per row.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// SVG of P_D, plus the image polygon under the flag valuation when a flag is
/// given. Throws NotGloballyGenerated.
std::string render_polytope_svg(const Fan2D& fan, const TorusDivisor& d, const std::optional<TFlag>& flag);

}  // namespace toricvol
