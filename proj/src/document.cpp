#include "toricvol/document.hpp"

#include <json.hpp>

#include <limits>

namespace toricvol {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Integer read_integer(const json& j, const std::string& field) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    throw ParseError("field '" + field + "'", "expected an integer, got " + std::string(j.type_name()));
}

std::size_t read_index(const json& j, const std::string& field) {
    const Integer v = read_integer(j, field);
    if (v < 0) throw ParseError("field '" + field + "'", "index must be nonnegative");
    return v.convert_to<std::size_t>();
}

std::int64_t to_int64(const Integer& v, const std::string& field) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw InvalidArgument("field '" + field + "': value " + v.str() + " does not fit a 64-bit integer");
    return v.convert_to<std::int64_t>();
}

}  // namespace

InstanceDocument parse_instance(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::string what = e.what();
        const auto pos = what.find("syntax error");
        throw ParseError(line_column(text, e.byte == 0 ? 0 : e.byte - 1),
                         pos == std::string::npos ? what : what.substr(pos));
    }
    if (!j.is_object()) throw ParseError("document", "expected a JSON object");

    InstanceDocument doc;
    if (!j.contains("rays")) throw ParseError("field 'rays'", "missing");
    if (!j.contains("divisor")) throw ParseError("field 'divisor'", "missing");
    const auto& rays = j["rays"];
    if (!rays.is_array()) throw ParseError("field 'rays'", "expected an array of integer pairs");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const std::string field = "rays[" + std::to_string(i) + "]";
        if (!rays[i].is_array() || rays[i].size() != 2) throw ParseError("field '" + field + "'", "expected [x, y]");
        doc.rays.emplace_back(read_integer(rays[i][0], field + "[0]"), read_integer(rays[i][1], field + "[1]"));
    }
    const auto& divisor = j["divisor"];
    if (!divisor.is_array()) throw ParseError("field 'divisor'", "expected an array of integers");
    for (std::size_t i = 0; i < divisor.size(); ++i)
        doc.divisor.push_back(read_integer(divisor[i], "divisor[" + std::to_string(i) + "]"));
    if (doc.divisor.size() != doc.rays.size())
        throw ParseError("field 'divisor'", "has " + std::to_string(doc.divisor.size()) + " entries but there are " +
                                                std::to_string(doc.rays.size()) + " rays");

    if (j.contains("flag")) {
        const auto& f = j["flag"];
        if (!f.is_object() || !f.contains("ray") || !f.contains("cone"))
            throw ParseError("field 'flag'", "expected {\"ray\": i, \"cone\": j}");
        doc.flag = TFlag{read_index(f["ray"], "flag.ray"), read_index(f["cone"], "flag.cone")};
    }
    if (j.contains("decomposition_variant")) {
        const auto& v = j["decomposition_variant"];
        if (!v.is_string()) throw ParseError("field 'decomposition_variant'", "expected a string");
        doc.decomposition_variant = v.get<std::string>();
    }
    for (const auto& [key, _] : j.items()) {
        if (key != "rays" && key != "divisor" && key != "flag" && key != "decomposition_variant")
            throw ParseError("field '" + key + "'", "unknown field");
    }
    return doc;
}

std::string emit_instance(const InstanceDocument& doc) {
    ordered_json j;
    j["rays"] = ordered_json::array();
    for (std::size_t i = 0; i < doc.rays.size(); ++i) {
        const std::string field = "rays[" + std::to_string(i) + "]";
        j["rays"].push_back({to_int64(doc.rays[i].x, field), to_int64(doc.rays[i].y, field)});
    }
    j["divisor"] = ordered_json::array();
    for (std::size_t i = 0; i < doc.divisor.size(); ++i)
        j["divisor"].push_back(to_int64(doc.divisor[i], "divisor[" + std::to_string(i) + "]"));
    if (doc.flag) j["flag"] = {{"ray", doc.flag->ray}, {"cone", doc.flag->cone}};
    if (doc.decomposition_variant) j["decomposition_variant"] = *doc.decomposition_variant;
    return j.dump();
}

InstanceDocument hirzebruch_instance(const Integer& l, const Integer& a, const Integer& b) {
    const auto fan = hirzebruch_fan(l);
    InstanceDocument doc;
    doc.rays = fan.rays();
    doc.divisor = hirzebruch_divisor(a, b).coeffs;
    return doc;
}

Instance resolve_instance(const InstanceDocument& doc) {
    auto fan = Fan2D::from_rays(doc.rays);
    TorusDivisor d(doc.divisor);
    if (d.coeffs.size() != fan.ray_count())
        throw ParseError("field 'divisor'", "length does not match the number of rays");
    Instance inst{std::move(fan), std::move(d), doc.flag, std::nullopt};
    if (inst.flag) {
        try {
            check_flag(inst.fan, *inst.flag);
        } catch (const InvalidArgument& e) {
            throw ParseError("field 'flag'", e.what());
        }
    }
    if (doc.decomposition_variant) {
        try {
            inst.variant = DecompositionVariant::parse(*doc.decomposition_variant);
            standard_decomposition(inst.fan, *inst.variant);
        } catch (const InvalidArgument& e) {
            throw ParseError("field 'decomposition_variant'", e.what());
        }
    }
    return inst;
}

}  // namespace toricvol
