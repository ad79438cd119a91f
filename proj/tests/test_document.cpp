#include "generators.hpp"
#include "toricvol/document.hpp"
#include "toricvol/report_io.hpp"
#include "toricvol/volume.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>
#include <sstream>
#include <string>

using namespace toricvol;

namespace {

std::string parse_error_context(std::string_view text) {
    try {
        (void)resolve_instance(parse_instance(text));
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("hirzebruch instance serialization") {
    CHECK(emit_instance(hirzebruch_instance(1, 1, 2)) ==
          R"({"rays":[[1,0],[0,1],[-1,1],[0,-1]],"divisor":[0,1,2,0]})");
    CHECK(emit_instance(hirzebruch_instance(3, 2, 7)) ==
          R"({"rays":[[1,0],[0,1],[-1,3],[0,-1]],"divisor":[0,2,7,0]})");
    CHECK_THROWS_AS(hirzebruch_instance(0, 1, 2), InvalidArgument);
    CHECK(is_ample(resolve_instance(hirzebruch_instance(3, 2, 7)).fan, hirzebruch_divisor(2, 7)));
    CHECK_FALSE(is_ample(hirzebruch_fan(2), hirzebruch_divisor(1, 2)));
}

TEST_CASE("optional fields") {
    InstanceDocument doc = hirzebruch_instance(2, 1, 3);
    doc.flag = TFlag{2, 1};
    doc.decomposition_variant = "successor";
    const auto text = emit_instance(doc);
    CHECK(text == R"({"rays":[[1,0],[0,1],[-1,2],[0,-1]],"divisor":[0,1,3,0],"flag":{"ray":2,"cone":1},)"
                  R"("decomposition_variant":"successor"})");
    CHECK(parse_instance(text) == doc);
    const auto inst = resolve_instance(doc);
    REQUIRE(inst.flag);
    CHECK(*inst.flag == TFlag{2, 1});
    REQUIRE(inst.variant);
    CHECK(inst.variant->rays == DecompositionVariant::RayRule::SuccessorRay);
}

TEST_CASE("round trip on random instances") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto fan = gen::random_fan(rng, 5);
        InstanceDocument doc{fan.rays(), {}, std::nullopt, std::nullopt};
        for (std::size_t i = 0; i < fan.ray_count(); ++i) doc.divisor.push_back(gen::random_vector(rng, 50).x);
        if (trial % 2) doc.flag = TFlag{0, 0};
        const auto back = parse_instance(emit_instance(doc));
        CHECK(back == doc);
        CHECK(emit_instance(back) == emit_instance(doc));
    }
    // Whitespace and key order are not significant on input.
    CHECK(parse_instance("{ \"divisor\" : [0,1,2,0],\n  \"rays\": [[1,0],[0,1],[-1,1],[0,-1]] }") ==
          hirzebruch_instance(1, 1, 2));
}

TEST_CASE("parse errors carry context") {
    CHECK_THROWS_AS(parse_instance(""), ParseError);
    CHECK(parse_error_context("{\"rays\": [[1,0],\n").find("line 2") != std::string::npos);
    CHECK(parse_error_context("[1,2]").find("object") != std::string::npos);
    CHECK(parse_error_context(R"({"divisor":[0,0,0]})").find("rays") != std::string::npos);
    CHECK(parse_error_context(R"({"rays":[[1,0],[0,1],[-1,-1]]})").find("divisor") != std::string::npos);
    CHECK(parse_error_context(R"({"rays":[[1,0],[0,1],[-1,-1]],"divisor":[0,0,"a"]})").find("divisor") !=
          std::string::npos);
    CHECK(parse_error_context(R"({"rays":[[1,0],[0,1],[-1]],"divisor":[0,0,0]})").find("rays") != std::string::npos);
    CHECK(parse_error_context(R"({"rays":[[1,0],[0,1],[-1,-1]],"divisor":[0,0,0],"colour":1})").find("colour") !=
          std::string::npos);
    CHECK(parse_error_context(R"({"rays":[[1,0],[0,1],[-1,-1]],"divisor":[0,0]})").find("divisor") !=
          std::string::npos);
    CHECK(parse_error_context(R"({"rays":[[1,0],[0,1],[-1,-1]],"divisor":[0,0,0],"flag":{"ray":0,"cone":1}})")
              .find("flag") != std::string::npos);
    CHECK(parse_error_context(R"({"rays":[[1,0],[0,1],[-1,-1]],"divisor":[0,0,0],"decomposition_variant":"x"})")
              .find("decomposition_variant") != std::string::npos);
    CHECK_THROWS_AS(resolve_instance(parse_instance(R"({"rays":[[1,0],[0,1]],"divisor":[0,0]})")), InvalidFan);
}

TEST_CASE("check results") {
    CHECK(lines(check_instance(hirzebruch_instance(1, 1, 2)).text()) ==
          std::vector<std::string>{"fan: valid", "globally generated: true", "ample: true"});
    const auto boundary = check_instance(hirzebruch_instance(1, 1, 1));
    CHECK(boundary.globally_generated);
    CHECK_FALSE(boundary.ample);
    CHECK(lines(boundary.text()).at(2) == "ample: false (cone 0, ray 2: slack 0)");

    const auto bad = check_instance(parse_instance(R"({"rays":[[1,0],[0,1],[2,2]],"divisor":[0,0,0]})"));
    CHECK_FALSE(bad.fan_valid);
    CHECK_FALSE(bad.fan_violations.empty());
    CHECK(lines(bad.text()).at(0).starts_with("fan: invalid"));
}

TEST_CASE("report formats") {
    const auto r = okounkov_volume_report(hirzebruch_fan(1), hirzebruch_divisor(1, 2));
    CHECK(parse_report_format("json") == ReportFormat::Json);
    CHECK_THROWS_AS(parse_report_format("xml"), InvalidArgument);

    const auto text = format_report(r, ReportFormat::Text);
    CHECK(text.find("simplex sum:               3/2") != std::string::npos);
    CHECK(text.find("contributing flags: 2") != std::string::npos);
    CHECK(text.find("agree: true") != std::string::npos);

    const auto j = nlohmann::json::parse(format_report(r, ReportFormat::Json));
    CHECK(j["area_polytope"] == "3/2");
    CHECK(j["self_intersection"] == "3");
    CHECK(j["agree"] == true);
    CHECK(j["per_flag"].size() == 8);

    const auto csv = lines(format_report(r, ReportFormat::Csv));
    CHECK(csv.at(0) == "kind,flag_ray,flag_cone,omitted,section_a,section_b,w1_a,w1_b,w2_a,w2_b,value");
    CHECK(csv.size() == 1 + 8 * 4 + 6);
    int terms = 0;
    for (const auto& l : csv) terms += l.starts_with("term,");
    CHECK(terms == 24);
    CHECK(std::find(csv.begin(), csv.end(), "flag,2,1,,,,,,,,1/2") != csv.end());

    const auto bad = okounkov_volume_report(hirzebruch_fan(1), hirzebruch_divisor(1, 1));
    CHECK(format_report(bad, ReportFormat::Text).find("ample: false") != std::string::npos);
    CHECK(nlohmann::json::parse(format_report(bad, ReportFormat::Json))["ample"] == false);
}

TEST_CASE("ranges") {
    CHECK(parse_range("3").first == 3);
    CHECK(parse_range("3").last == 3);
    CHECK(parse_range("-2..5").first == -2);
    CHECK(parse_range("-2..5").last == 5);
    CHECK_THROWS_AS(parse_range("5..2"), InvalidArgument);
    CHECK_THROWS_AS(parse_range(""), InvalidArgument);
    CHECK_THROWS_AS(parse_range("1..x"), InvalidArgument);
}

TEST_CASE("sweep") {
    const auto rows = hirzebruch_sweep(parse_range("1..2"), parse_range("1..2"), parse_range("1..2"));
    REQUIRE(rows.size() == 8);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].agree);
        CHECK(rows[i].area == Rational(rows[i].a * rows[i].b) - Rational(rows[i].l * rows[i].a * rows[i].a) / 2);
        if (i) CHECK(std::tie(rows[i - 1].l, rows[i - 1].a, rows[i - 1].b) < std::tie(rows[i].l, rows[i].a, rows[i].b));
    }
    CHECK(sweep_csv(hirzebruch_sweep({1, 1}, {1, 1}, {1, 1})) ==
          "l,a,b,area,dsq,simplex_sum,symbol_sum,agree\n1,1,2,3/2,3,3/2,3/2,true\n");
    const auto edge = hirzebruch_sweep({2, 2}, {1, 1}, {0, 0});
    REQUIRE(edge.size() == 1);
    CHECK_FALSE(edge[0].agree);
    CHECK(lines(sweep_csv(edge)).at(1) == "2,1,2,,2,,,false");
    CHECK_THROWS_AS(hirzebruch_sweep({0, 1}, {1, 1}, {1, 1}), InvalidArgument);
    // Deterministic under concurrency.
    const auto big = hirzebruch_sweep({1, 4}, {1, 5}, {1, 5});
    CHECK(sweep_csv(big) == sweep_csv(hirzebruch_sweep({1, 4}, {1, 5}, {1, 5})));
}

TEST_CASE("polytope rendering") {
    const auto svg = render_polytope_svg(hirzebruch_fan(1), hirzebruch_divisor(1, 2), std::nullopt);
    CHECK(svg.find(R"(points="0,-1 1,-1 2,0 0,0")") != std::string::npos);
    CHECK(svg.find("area 3/2") != std::string::npos);
    CHECK(svg.find(R"(viewBox="-1 -1 4 3")") != std::string::npos);

    const auto overlay = render_polytope_svg(hirzebruch_fan(1), hirzebruch_divisor(1, 2), TFlag{2, 1});
    CHECK(overlay.find("image under flag (ray 2, cone 1) area 3/2") != std::string::npos);

    const auto point = render_polytope_svg(hirzebruch_fan(1), TorusDivisor::zero(hirzebruch_fan(1)), std::nullopt);
    CHECK(point.find("<circle") != std::string::npos);
    CHECK_THROWS_AS(render_polytope_svg(hirzebruch_fan(1), TorusDivisor({0, 1, 0, 0}), std::nullopt),
                    NotGloballyGenerated);
}
