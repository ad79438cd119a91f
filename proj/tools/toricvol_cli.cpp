// Command-line front end over the C interface.
//
// Exit status: 0 success / all routes agree, 1 non-ample or disagreement,
// 2 input or usage error.

#include "toricvol.h"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <variant>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kMath = 1;
constexpr int kInput = 2;

struct InstanceDeleter {
    void operator()(tv_instance* p) const { tv_instance_free(p); }
};
struct ReportDeleter {
    void operator()(tv_report* p) const { tv_report_free(p); }
};
using InstancePtr = std::unique_ptr<tv_instance, InstanceDeleter>;
using ReportPtr = std::unique_ptr<tv_report, ReportDeleter>;

std::string take(char* s) {
    std::string out = s ? s : "";
    tv_string_free(s);
    return out;
}

int exit_code(tv_status s) {
    switch (s) {
        case TV_OK: return kOk;
        case TV_ERR_NOT_AMPLE:
        case TV_ERR_NOT_GENERATED: return kMath;
        default: return kInput;
    }
}

int report_error(tv_status s) {
    std::cerr << "error: " << tv_status_name(s) << ": " << tv_last_error() << "\n";
    return exit_code(s);
}

std::optional<std::string> read_file(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    return std::string(std::istreambuf_iterator<char>(in), {});
}

bool write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    return static_cast<bool>(out);
}

// Loads and parses an instance document; returns an exit code on failure.
std::variant<InstancePtr, int> load_instance(const std::string& path) {
    const auto text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return kInput;
    }
    tv_instance* raw = nullptr;
    if (const auto s = tv_instance_parse(text->c_str(), &raw); s != TV_OK) {
        std::cerr << "error: " << path << ": " << tv_last_error() << "\n";
        return kInput;
    }
    return InstancePtr(raw);
}

struct FlagArg {
    int ray = -1;
    int cone = -1;
};

bool parse_flag(const std::string& text, FlagArg& flag) {
    if (text.empty()) return true;
    const auto comma = text.find(',');
    if (comma == std::string::npos) return false;
    auto parse = [](std::string_view s, int& v) {
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        return !s.empty() && ec == std::errc() && p == s.data() + s.size() && v >= 0;
    };
    return parse(std::string_view(text).substr(0, comma), flag.ray) &&
           parse(std::string_view(text).substr(comma + 1), flag.cone);
}

struct Range {
    long long lo = 0;
    long long hi = 0;
};

bool parse_range(const std::string& text, Range& r) {
    auto parse = [](std::string_view s, long long& v) {
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        return !s.empty() && ec == std::errc() && p == s.data() + s.size();
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        if (!parse(text, r.lo)) return false;
        r.hi = r.lo;
        return true;
    }
    return parse(std::string_view(text).substr(0, dots), r.lo) &&
           parse(std::string_view(text).substr(dots + 2), r.hi);
}

int cmd_check(const std::string& path) {
    auto loaded = load_instance(path);
    if (auto* code = std::get_if<int>(&loaded)) return *code;
    const auto& inst = std::get<InstancePtr>(loaded);
    int ample = 0;
    char* text = nullptr;
    if (const auto s = tv_instance_check(inst.get(), &ample, &text); s != TV_OK) return report_error(s);
    const std::string out = take(text);
    std::cout << out;
    if (out.starts_with("fan: invalid")) return kInput;
    return ample ? kOk : kMath;
}

int cmd_report(const std::string& path, const std::string& format, const FlagArg& flag, const char* decomposition) {
    tv_format fmt;
    if (format == "text") fmt = TV_FORMAT_TEXT;
    else if (format == "json") fmt = TV_FORMAT_JSON;
    else if (format == "csv") fmt = TV_FORMAT_CSV;
    else {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kInput;
    }
    auto loaded = load_instance(path);
    if (auto* code = std::get_if<int>(&loaded)) return *code;
    const auto& inst = std::get<InstancePtr>(loaded);
    tv_report* raw = nullptr;
    if (const auto s = tv_report_compute(inst.get(), decomposition, flag.ray, flag.cone, &raw); s != TV_OK)
        return report_error(s);
    ReportPtr report(raw);
    char* text = nullptr;
    if (const auto s = tv_report_format(report.get(), fmt, &text); s != TV_OK) return report_error(s);
    std::cout << take(text);
    return tv_report_ample(report.get()) && tv_report_agree(report.get()) ? kOk : kMath;
}

int cmd_hirzebruch(long long l, long long a, long long b, const std::string& emit) {
    tv_instance* raw = nullptr;
    if (const auto s = tv_instance_hirzebruch(l, a, b, &raw); s != TV_OK) return report_error(s);
    InstancePtr inst(raw);
    char* doc = nullptr;
    if (const auto s = tv_instance_emit(inst.get(), &doc); s != TV_OK) return report_error(s);
    if (!write_output(emit, take(doc) + "\n")) {
        std::cerr << "error: cannot write '" << emit << "'\n";
        return kInput;
    }
    int ample = 0;
    char* text = nullptr;
    if (const auto s = tv_instance_check(inst.get(), &ample, &text); s != TV_OK) return report_error(s);
    tv_string_free(text);
    std::cerr << "ample: " << (ample ? "true" : "false") << "\n";
    return ample ? kOk : kMath;
}

int cmd_sweep(const Range& l, const Range& a, const Range& extra, const std::string& csv_path,
              const char* decomposition) {
    char* csv = nullptr;
    int all_agree = 0;
    if (const auto s = tv_sweep_csv(l.lo, l.hi, a.lo, a.hi, extra.lo, extra.hi, decomposition, &csv, &all_agree);
        s != TV_OK)
        return report_error(s);
    if (!write_output(csv_path, take(csv))) {
        std::cerr << "error: cannot write '" << csv_path << "'\n";
        return kInput;
    }
    return all_agree ? kOk : kMath;
}

int cmd_polytope(const std::string& path, const std::string& svg_path, const FlagArg& flag) {
    auto loaded = load_instance(path);
    if (auto* code = std::get_if<int>(&loaded)) return *code;
    const auto& inst = std::get<InstancePtr>(loaded);
    char* svg = nullptr;
    if (const auto s = tv_polytope_svg(inst.get(), flag.ray, flag.cone, &svg); s != TV_OK) return report_error(s);
    if (!write_output(svg_path, take(svg))) {
        std::cerr << "error: cannot write '" << svg_path << "'\n";
        return kInput;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact volumes of ample divisors on smooth complete toric surfaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tv_version());

    std::string decomposition;
    app.add_option("--decomposition", decomposition, "Orbit decomposition: default, successor or generic-at=K")
        ->capture_default_str();

    std::string path;
    std::string format = "text";
    std::string flag_text;

    auto* check = app.add_subcommand("check", "Validate a document: fan, global generation, ampleness");
    check->add_option("path", path, "Instance document ('-' for stdin)")->required();

    auto* report = app.add_subcommand("report", "Compute and cross-check the volume by every route");
    report->add_option("path", path, "Instance document ('-' for stdin)")->required();
    report->add_option("--format", format, "text, json or csv")->capture_default_str();
    report->add_option("--flag", flag_text, "Display flag as RAY,CONE");

    long long l = 1, a = 0, b = 0;
    std::string emit;
    auto* hirz = app.add_subcommand("hirzebruch", "Emit the document for F_l with D = a*s1 + b*s3");
    hirz->add_option("--l", l, "Surface parameter (>= 1)")->required();
    hirz->add_option("--a", a, "Coefficient of s1")->required();
    hirz->add_option("--b", b, "Coefficient of s3")->required();
    hirz->add_option("--emit", emit, "Output path (default stdout)");

    std::string l_range, a_range, extra_range, csv_path;
    auto* sweep = app.add_subcommand("sweep", "Tabulate the Hirzebruch family with b = l*a + extra");
    sweep->add_option("--l", l_range, "Range L1..L2")->required();
    sweep->add_option("--a", a_range, "Range A1..A2")->required();
    sweep->add_option("--b-extra", extra_range, "Range E1..E2")->required();
    sweep->add_option("--csv", csv_path, "Output path (default stdout)");

    std::string svg_path;
    auto* polytope = app.add_subcommand("polytope", "Render the divisor polytope as SVG");
    polytope->add_option("path", path, "Instance document ('-' for stdin)")->required();
    polytope->add_option("--svg", svg_path, "Output path (default stdout)");
    polytope->add_option("--flag", flag_text, "Overlay the image under the flag RAY,CONE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    const char* dec = decomposition.empty() ? nullptr : decomposition.c_str();
    FlagArg flag;
    if (!parse_flag(flag_text, flag)) {
        std::cerr << "error: --flag expects RAY,CONE\n";
        return kInput;
    }

    if (*check) return cmd_check(path);
    if (*report) return cmd_report(path, format, flag, dec);
    if (*hirz) return cmd_hirzebruch(l, a, b, emit);
    if (*sweep) {
        Range lr, ar, er;
        if (!parse_range(l_range, lr) || !parse_range(a_range, ar) || !parse_range(extra_range, er)) {
            std::cerr << "error: ranges must look like N or A..B\n";
            return kInput;
        }
        return cmd_sweep(lr, ar, er, csv_path, dec);
    }
    if (*polytope) return cmd_polytope(path, svg_path, flag);
    return kInput;
}
