#include "toricvol/report_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <sstream>
#include <mutex>
#include <thread>
#include <tuple>

namespace toricvol {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string q(const Rational& r) { return r.str(); }
std::string q(const Integer& i) { return i.str(); }

std::string witness_text(const PositivityWitness& w) {
    return "cone " + std::to_string(w.cone) + ", ray " + std::to_string(w.ray) + ": slack " + w.slack.str();
}

std::string flag_text(const TFlag& f) {
    return "(ray " + std::to_string(f.ray) + ", cone " + std::to_string(f.cone) + ")";
}

}  // namespace

// -- check ------------------------------------------------------------------

std::string CheckResult::text() const {
    std::ostringstream os;
    if (!fan_valid) {
        os << "fan: invalid\n";
        for (const auto& v : fan_violations) os << "  " << v.message << "\n";
        return os.str();
    }
    os << "fan: valid\n";
    os << "globally generated: " << (globally_generated ? "true" : "false");
    if (!globally_generated) os << " (" << witness_text(generation_violations.front()) << ")";
    os << "\nample: " << (ample ? "true" : "false");
    if (!ample) os << " (" << witness_text(ampleness_violations.front()) << ")";
    os << "\n";
    for (std::size_t i = 1; i < ampleness_violations.size(); ++i)
        os << "  also " << witness_text(ampleness_violations[i]) << "\n";
    return os.str();
}

CheckResult check_instance(const InstanceDocument& doc) {
    CheckResult r;
    auto v = validate_fan(doc.rays);
    r.fan_violations = v.violations;
    if (v.ok() && doc.divisor.size() != doc.rays.size()) {
        r.fan_violations.push_back({FanViolation::Kind::TooFewRays, doc.divisor.size(),
                                    "divisor length " + std::to_string(doc.divisor.size()) +
                                        " does not match ray count " + std::to_string(doc.rays.size())});
    }
    r.fan_valid = r.fan_violations.empty();
    if (!r.fan_valid) return r;
    const TorusDivisor d(doc.divisor);
    auto gg = is_globally_generated(*v.fan, d);
    r.globally_generated = gg.generated;
    r.generation_violations = std::move(gg.violations);
    auto amp = ampleness(*v.fan, d);
    r.ample = amp.ample;
    r.ampleness_violations = std::move(amp.violations);
    return r;
}

// -- reports ----------------------------------------------------------------

ReportFormat parse_report_format(std::string_view name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw InvalidArgument("unknown report format '" + std::string(name) + "' (expected text, json or csv)");
}

namespace {

std::string report_text(const VolumeReport& r) {
    std::ostringstream os;
    os << "decomposition: " << r.decomposition << "\n";
    os << "ample: " << (r.ample ? "true" : "false") << "\n";
    if (!r.ample) {
        for (const auto& d : r.diagnostics) os << "  " << d << "\n";
        return os.str();
    }
    os << "polytope: " << r.polytope << "\n";
    os << "area(P_D):                 " << q(r.area_polytope) << "\n";
    os << "D^2:                       " << q(r.self_intersection) << "\n";
    os << "D^2 / 2:                   " << q(r.half_self_intersection) << "\n";
    os << "simplex sum:               " << q(r.simplex_sum) << "\n";
    os << "symbol sum:                " << q(r.symbol_sum) << "\n";
    os << "symbol sum / 2:            " << q(r.symbol_sum_half) << "\n";
    os << "trivialization area " << flag_text(r.display_flag) << ": " << q(r.lhs_trivialization_area) << "\n";
    os << "contributing flags: " << r.contributing_flag_count() << "\n";
    for (const auto& f : r.per_flag) {
        os << "flag " << flag_text(f.flag) << " owners " << f.owners[0] << "," << f.owners[1] << "," << f.owners[2]
           << ": subtotal " << q(f.subtotal) << ", symbol " << q(f.symbol_boundary) << "\n";
        for (const auto& t : f.terms) {
            os << "  c=" << t.omitted << " sections " << t.sections[0] << "," << t.sections[1] << " det[["
               << t.matrix[0][0] << "," << t.matrix[0][1] << "],[" << t.matrix[1][0] << "," << t.matrix[1][1]
               << "]] -> " << q(t.signed_volume) << "\n";
        }
    }
    os << "agree: " << (r.agree ? "true" : "false") << "\n";
    return os.str();
}

std::string report_json(const VolumeReport& r) {
    ordered_json j;
    j["ample"] = r.ample;
    j["decomposition"] = r.decomposition;
    if (!r.ample) {
        j["diagnostics"] = r.diagnostics;
        return j.dump(2) + "\n";
    }
    j["display_flag"] = {{"ray", r.display_flag.ray}, {"cone", r.display_flag.cone}};
    j["area_polytope"] = q(r.area_polytope);
    j["self_intersection"] = q(r.self_intersection);
    j["half_self_intersection"] = q(r.half_self_intersection);
    j["simplex_sum"] = q(r.simplex_sum);
    j["symbol_sum"] = q(r.symbol_sum);
    j["symbol_sum_half"] = q(r.symbol_sum_half);
    j["lhs_trivialization_area"] = q(r.lhs_trivialization_area);
    auto& vertices = j["polytope"] = ordered_json::array();
    for (const auto& p : r.polytope.vertices()) vertices.push_back({q(p.x), q(p.y)});
    auto& flags = j["per_flag"] = ordered_json::array();
    for (const auto& f : r.per_flag) {
        ordered_json jf;
        jf["ray"] = f.flag.ray;
        jf["cone"] = f.flag.cone;
        jf["owners"] = f.owners;
        jf["subtotal"] = q(f.subtotal);
        jf["symbol_boundary"] = q(f.symbol_boundary);
        auto& terms = jf["terms"] = ordered_json::array();
        for (const auto& t : f.terms) {
            terms.push_back({{"omitted", t.omitted},
                             {"sections", t.sections},
                             {"matrix", {{q(t.matrix[0][0]), q(t.matrix[0][1])}, {q(t.matrix[1][0]), q(t.matrix[1][1])}}},
                             {"signed_volume", q(t.signed_volume)},
                             {"residue_degree", q(t.residue_degree)}});
        }
        flags.push_back(std::move(jf));
    }
    j["contributing_flags"] = r.contributing_flag_count();
    j["agree"] = r.agree;
    return j.dump(2) + "\n";
}

std::string report_csv(const VolumeReport& r) {
    std::ostringstream os;
    os << "kind,flag_ray,flag_cone,omitted,section_a,section_b,w1_a,w1_b,w2_a,w2_b,value\n";
    if (!r.ample) {
        os << "ample,,,,,,,,,,false\n";
        return os.str();
    }
    for (const auto& f : r.per_flag) {
        for (const auto& t : f.terms) {
            os << "term," << f.flag.ray << "," << f.flag.cone << "," << t.omitted << "," << t.sections[0] << ","
               << t.sections[1] << "," << t.matrix[0][0] << "," << t.matrix[0][1] << "," << t.matrix[1][0] << ","
               << t.matrix[1][1] << "," << q(t.signed_volume) << "\n";
        }
        os << "flag," << f.flag.ray << "," << f.flag.cone << ",,,,,,,," << q(f.subtotal) << "\n";
    }
    auto summary = [&](const char* kind, const std::string& v) { os << kind << ",,,,,,,,,," << v << "\n"; };
    summary("area_polytope", q(r.area_polytope));
    summary("half_self_intersection", q(r.half_self_intersection));
    summary("simplex_sum", q(r.simplex_sum));
    summary("symbol_sum_half", q(r.symbol_sum_half));
    os << "lhs_trivialization_area," << r.display_flag.ray << "," << r.display_flag.cone << ",,,,,,,,"
       << q(r.lhs_trivialization_area) << "\n";
    summary("agree", r.agree ? "true" : "false");
    return os.str();
}

}  // namespace

std::string format_report(const VolumeReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Text: return report_text(report);
        case ReportFormat::Json: return report_json(report);
        case ReportFormat::Csv: return report_csv(report);
    }
    throw InvalidArgument("unknown report format");
}

// -- sweeps -----------------------------------------------------------------

IntRange parse_range(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw InvalidArgument("malformed range '" + std::string(text) + "' (expected N or A..B)");
        return Integer(v);
    };
    const auto dots = text.find("..");
    IntRange r = dots == std::string_view::npos
                     ? IntRange{parse_int(text), parse_int(text)}
                     : IntRange{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    if (r.first > r.last) throw InvalidArgument("empty range '" + std::string(text) + "'");
    return r;
}

std::vector<SweepRow> hirzebruch_sweep(const IntRange& l, const IntRange& a, const IntRange& extra,
                                       const DecompositionVariant& variant) {
    for (const auto* r : {&l, &a, &extra})
        if (r->first > r->last) throw InvalidArgument("empty sweep range");
    if (l.first < 1) throw InvalidArgument("sweep: l must be >= 1");

    std::vector<SweepRow> rows;
    for (Integer li = l.first; li <= l.last; ++li)
        for (Integer ai = a.first; ai <= a.last; ++ai)
            for (Integer e = extra.first; e <= extra.last; ++e) {
                SweepRow row;
                row.l = li;
                row.a = ai;
                row.b = li * ai + e;
                rows.push_back(std::move(row));
            }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
        return std::tie(x.l, x.a, x.b) < std::tie(y.l, y.a, y.b);
    });

    auto compute = [&](SweepRow& row) {
        const auto fan = hirzebruch_fan(row.l);
        const auto d = hirzebruch_divisor(row.a, row.b);
        row.dsq = self_intersection_classical(fan, d);
        const auto report = okounkov_volume_report(fan, d, variant);
        row.ample = report.ample;
        if (!report.ample) return;
        row.area = report.area_polytope;
        row.simplex_sum = report.simplex_sum;
        row.symbol_sum = report.symbol_sum_half;
        row.agree = report.agree && report.self_intersection == row.dsq;
    };

    // Rows are independent; workers claim them by index.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            try {
                compute(rows[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const std::size_t n_threads =
        std::min<std::size_t>(rows.size(), std::max(1u, std::thread::hardware_concurrency()));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "l,a,b,area,dsq,simplex_sum,symbol_sum,agree\n";
    for (const auto& r : rows) {
        os << r.l << "," << r.a << "," << r.b << ",";
        if (r.ample)
            os << q(r.area) << "," << r.dsq << "," << q(r.simplex_sum) << "," << q(r.symbol_sum) << ",";
        else
            os << "," << r.dsq << ",,,";
        os << (r.agree ? "true" : "false") << "\n";
    }
    return os.str();
}

// -- svg --------------------------------------------------------------------

std::string render_polytope_svg(const Fan2D& fan, const TorusDivisor& d, const std::optional<TFlag>& flag) {
    const Polygon pd = divisor_polytope(fan, d);
    std::optional<Polygon> image;
    if (flag) {
        const auto w = flag_valuation(fan, *flag);
        std::vector<LatticeVector> pts;
        for (const auto& v : pd.vertices()) {
            // Vertices of P_D are Cartier data, hence lattice points.
            const Monomial m{{numerator(v.x), numerator(v.y)}};
            pts.push_back(value(w, m).as_vector());
        }
        image = convex_hull_2d(pts);
    }

    Rational xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const Polygon* p : std::array<const Polygon*, 2>{&pd, image ? &*image : nullptr}) {
        if (!p) continue;
        for (const auto& v : p->vertices()) {
            if (first) {
                xmin = xmax = v.x;
                ymin = ymax = v.y;
                first = false;
            }
            xmin = std::min(xmin, v.x);
            xmax = std::max(xmax, v.x);
            ymin = std::min(ymin, v.y);
            ymax = std::max(ymax, v.y);
        }
    }
    xmin -= 1;
    ymin -= 1;
    xmax += 1;
    ymax += 1;

    auto shape = [](const Polygon& p, const char* style) {
        std::ostringstream os;
        const auto& v = p.vertices();
        if (v.size() == 1) {
            os << "    <circle cx=\"" << q(v[0].x) << "\" cy=\"" << q(v[0].y) << "\" r=\"0.08\" " << style << "/>\n";
            return os.str();
        }
        os << "    <" << (v.size() == 2 ? "polyline" : "polygon") << " points=\"";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << q(v[i].x) << "," << q(v[i].y);
        os << "\" " << style << "/>\n";
        return os.str();
    };

    // SVG lengths must be plain numbers; the padded box has integer corners
    // because every vertex here is a lattice point.
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << q(xmin) << " " << q(-ymax) << " "
       << q(xmax - xmin) << " " << q(ymax - ymin) << "\" width=\"400\" height=\"400\">\n";
    os << "  <title>P_D area " << q(pd.area());
    if (image) os << "; image under flag " << flag_text(*flag) << " area " << q(image->area());
    os << "</title>\n";
    os << "  <g transform=\"scale(1,-1)\" stroke-width=\"0.03\">\n";
    os << shape(pd, "fill=\"#4e79a7\" fill-opacity=\"0.4\" stroke=\"#4e79a7\"");
    if (image) os << shape(*image, "fill=\"#e15759\" fill-opacity=\"0.3\" stroke=\"#e15759\"");
    os << "  </g>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace toricvol
