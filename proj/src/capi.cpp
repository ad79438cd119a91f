#include "toricvol.h"

#include "toricvol/document.hpp"
#include "toricvol/report_io.hpp"
#include "toricvol/volume.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct tv_instance {
    toricvol::InstanceDocument doc;
};

struct tv_report {
    toricvol::VolumeReport report;
};

namespace {

thread_local std::string last_error;

tv_status fail(tv_status status, const std::string& message) {
    last_error = message;
    return status;
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tv_status set_string(char** out, const std::string& s) {
    *out = duplicate(s);
    return *out ? TV_OK : fail(TV_ERR_INTERNAL, "out of memory");
}

// Runs f and maps library exceptions onto status codes.
template <class F>
tv_status guarded(F&& f) {
    using namespace toricvol;
    last_error.clear();
    try {
        return f();
    } catch (const ParseError& e) {
        return fail(TV_ERR_PARSE, e.what());
    } catch (const InvalidFan& e) {
        return fail(TV_ERR_INVALID_FAN, e.what());
    } catch (const NotGloballyGenerated& e) {
        return fail(TV_ERR_NOT_GENERATED, e.what());
    } catch (const NotAmple& e) {
        return fail(TV_ERR_NOT_AMPLE, e.what());
    } catch (const InvalidArgument& e) {
        return fail(TV_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(TV_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TV_ERR_INTERNAL, "unknown error");
    }
}

std::optional<toricvol::TFlag> pick_flag(int ray, int cone) {
    if (ray < 0 || cone < 0) return std::nullopt;
    return toricvol::TFlag{static_cast<std::size_t>(ray), static_cast<std::size_t>(cone)};
}

}  // namespace

extern "C" {

const char* tv_version(void) { return "1.0.0"; }

const char* tv_last_error(void) { return last_error.c_str(); }

const char* tv_status_name(tv_status status) {
    switch (status) {
        case TV_OK: return "ok";
        case TV_ERR_NULL_ARGUMENT: return "null argument";
        case TV_ERR_PARSE: return "parse error";
        case TV_ERR_INVALID_FAN: return "invalid fan";
        case TV_ERR_INVALID_ARGUMENT: return "invalid argument";
        case TV_ERR_NOT_GENERATED: return "not globally generated";
        case TV_ERR_NOT_AMPLE: return "not ample";
        case TV_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void tv_string_free(char* s) { std::free(s); }

tv_status tv_instance_parse(const char* text, tv_instance** out) {
    if (!text || !out) return fail(TV_ERR_NULL_ARGUMENT, "tv_instance_parse: null argument");
    return guarded([&] {
        *out = new tv_instance{toricvol::parse_instance(text)};
        return TV_OK;
    });
}

tv_status tv_instance_hirzebruch(long long l, long long a, long long b, tv_instance** out) {
    if (!out) return fail(TV_ERR_NULL_ARGUMENT, "tv_instance_hirzebruch: null argument");
    return guarded([&] {
        *out = new tv_instance{toricvol::hirzebruch_instance(l, a, b)};
        return TV_OK;
    });
}

void tv_instance_free(tv_instance* inst) { delete inst; }

tv_status tv_instance_emit(const tv_instance* inst, char** out) {
    if (!inst || !out) return fail(TV_ERR_NULL_ARGUMENT, "tv_instance_emit: null argument");
    return guarded([&] { return set_string(out, toricvol::emit_instance(inst->doc)); });
}

tv_status tv_instance_check(const tv_instance* inst, int* ample, char** text) {
    if (!inst || !ample || !text) return fail(TV_ERR_NULL_ARGUMENT, "tv_instance_check: null argument");
    return guarded([&] {
        const auto r = toricvol::check_instance(inst->doc);
        *ample = r.fan_valid && r.ample;
        return set_string(text, r.text());
    });
}

tv_status tv_report_compute(const tv_instance* inst, const char* decomposition, int flag_ray, int flag_cone,
                            tv_report** out) {
    if (!inst || !out) return fail(TV_ERR_NULL_ARGUMENT, "tv_report_compute: null argument");
    return guarded([&] {
        using namespace toricvol;
        const auto instance = resolve_instance(inst->doc);
        DecompositionVariant variant = instance.variant.value_or(DecompositionVariant{});
        if (decomposition) variant = DecompositionVariant::parse(decomposition);
        const TFlag flag = pick_flag(flag_ray, flag_cone).value_or(instance.flag.value_or(TFlag{0, 0}));
        *out = new tv_report{okounkov_volume_report(instance.fan, instance.divisor, variant, flag)};
        return TV_OK;
    });
}

void tv_report_free(tv_report* report) { delete report; }

int tv_report_ample(const tv_report* report) { return report && report->report.ample; }

int tv_report_agree(const tv_report* report) { return report && report->report.agree; }

size_t tv_report_contributing_flags(const tv_report* report) {
    return report ? report->report.contributing_flag_count() : 0;
}

tv_status tv_report_value(const tv_report* report, const char* name, char** out) {
    if (!report || !name || !out) return fail(TV_ERR_NULL_ARGUMENT, "tv_report_value: null argument");
    const auto& r = report->report;
    if (!r.ample) return fail(TV_ERR_NOT_AMPLE, "report of a non-ample divisor has no values");
    const std::string key = name;
    std::string v;
    if (key == "area_polytope") v = r.area_polytope.str();
    else if (key == "self_intersection") v = r.self_intersection.str();
    else if (key == "half_self_intersection") v = r.half_self_intersection.str();
    else if (key == "simplex_sum") v = r.simplex_sum.str();
    else if (key == "symbol_sum") v = r.symbol_sum.str();
    else if (key == "symbol_sum_half") v = r.symbol_sum_half.str();
    else if (key == "lhs_trivialization_area") v = r.lhs_trivialization_area.str();
    else return fail(TV_ERR_INVALID_ARGUMENT, "unknown report value '" + key + "'");
    return set_string(out, v);
}

tv_status tv_report_format(const tv_report* report, tv_format format, char** out) {
    if (!report || !out) return fail(TV_ERR_NULL_ARGUMENT, "tv_report_format: null argument");
    return guarded([&] {
        toricvol::ReportFormat f;
        switch (format) {
            case TV_FORMAT_TEXT: f = toricvol::ReportFormat::Text; break;
            case TV_FORMAT_JSON: f = toricvol::ReportFormat::Json; break;
            case TV_FORMAT_CSV: f = toricvol::ReportFormat::Csv; break;
            default: return fail(TV_ERR_INVALID_ARGUMENT, "unknown report format");
        }
        return set_string(out, toricvol::format_report(report->report, f));
    });
}

tv_status tv_sweep_csv(long long l_lo, long long l_hi, long long a_lo, long long a_hi, long long e_lo,
                       long long e_hi, const char* decomposition, char** csv, int* all_agree) {
    if (!csv || !all_agree) return fail(TV_ERR_NULL_ARGUMENT, "tv_sweep_csv: null argument");
    return guarded([&] {
        using namespace toricvol;
        const auto variant = decomposition ? DecompositionVariant::parse(decomposition) : DecompositionVariant{};
        const auto rows = hirzebruch_sweep({l_lo, l_hi}, {a_lo, a_hi}, {e_lo, e_hi}, variant);
        *all_agree = 1;
        for (const auto& r : rows) *all_agree = *all_agree && r.agree;
        return set_string(csv, sweep_csv(rows));
    });
}

tv_status tv_polytope_svg(const tv_instance* inst, int flag_ray, int flag_cone, char** svg) {
    if (!inst || !svg) return fail(TV_ERR_NULL_ARGUMENT, "tv_polytope_svg: null argument");
    return guarded([&] {
        using namespace toricvol;
        const auto instance = resolve_instance(inst->doc);
        auto flag = pick_flag(flag_ray, flag_cone);
        if (!flag) flag = instance.flag;
        if (flag) check_flag(instance.fan, *flag);
        return set_string(svg, render_polytope_svg(instance.fan, instance.divisor, flag));
    });
}

}  // extern "C"
