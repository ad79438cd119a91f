#pragma once

// Instance documents: a fan, a divisor and optional report settings, stored
// as a small JSON object, e.g.
//   {"rays":[[1,0],[0,1],[-1,1],[0,-1]],"divisor":[0,1,2,0]}

#include "toricvol/divisor.hpp"
#include "toricvol/fan.hpp"
#include "toricvol/valuation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toricvol {

struct InstanceDocument {
    std::vector<LatticeVector> rays;
    std::vector<Integer> divisor;
    std::optional<TFlag> flag;
    std::optional<std::string> decomposition_variant;

    friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

/// Throws ParseError with line/column or field context.
InstanceDocument parse_instance(std::string_view text);

/// Compact JSON with keys in the order rays, divisor, flag, decomposition_variant.
std::string emit_instance(const InstanceDocument& doc);

/// F_l with D = a*s1 + b*s3. Throws InvalidArgument for l < 1.
InstanceDocument hirzebruch_instance(const Integer& l, const Integer& a, const Integer& b);

struct Instance {
    Fan2D fan;
    TorusDivisor divisor;
    std::optional<TFlag> flag;
    std::optional<DecompositionVariant> variant;
};

/// Validates the fan (InvalidFan), the divisor length and the optional fields
/// (ParseError naming the field).
Instance resolve_instance(const InstanceDocument& doc);

}  // namespace toricvol
