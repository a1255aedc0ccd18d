#include <catch_amalgamated.hpp>

#include "grlb/output.hpp"
#include "grlb/tables.hpp"
#include "grlb/verify.hpp"

using namespace grlb;
using Catch::Matchers::ContainsSubstring;

namespace {

std::vector<HorosphericalDatum> sample() {
    return {HorosphericalDatum::x1(3),    HorosphericalDatum::x1(9), HorosphericalDatum::x2(),
            HorosphericalDatum::x3(7, 4), HorosphericalDatum::x3(5, 5), HorosphericalDatum::x4(),
            HorosphericalDatum::x5()};
}

} // namespace

TEST_CASE("engine record contents") {
    const auto r = output::make_record(report(HorosphericalDatum::x5()), 4);
    CHECK(r.family == "X5");
    CHECK(r.params.empty());
    CHECK(r.dim == 7);
    CHECK(r.R == make_rational(56, 67));
    CHECK(r.R_decimal == "0.8358");
    CHECK(r.provenance == "engine");
    const auto j = output::to_json(r);
    CHECK(j["schema_version"] == 1);
    CHECK(j["R"] == "56/67");
    CHECK(j["barycenter_t"] == "-11/28");
    CHECK(j["interval"][0] == "-2/1");
    CHECK(j["two_rho_P"][0]["index"] == 1);
    CHECK(j["two_rho_P"][0]["numerator"] == "2");
}

TEST_CASE("closed-form records agree with engine records") {
    for (const auto& d : {HorosphericalDatum::x1(6), HorosphericalDatum::x3(6, 3), HorosphericalDatum::x3(6, 6)}) {
        const auto engine = output::make_record(report(d), 6);
        const auto closed = output::make_closed_form_record(d, 6);
        INFO(d.label());
        CHECK(closed.R == engine.R);
        CHECK(closed.barycenter_t == engine.barycenter_t);
        CHECK(closed.dim == engine.dim);
        CHECK(closed.provenance == "closed-form");
    }
    CHECK_THROWS_AS(output::make_closed_form_record(HorosphericalDatum::x4(), 4), Error);
}

TEST_CASE("JSON round trip is byte-identical") {
    for (const auto& d : sample()) {
        for (std::size_t digits : {1U, 4U, 30U}) {
            const std::string text = output::to_json_text(output::make_record(report(d), digits));
            const auto parsed = output::record_from_json(nlohmann::json::parse(text));
            CHECK(output::to_json_text(parsed) == text);
        }
    }
}

TEST_CASE("malformed JSON records are rejected") {
    auto j = nlohmann::json::parse(output::to_json_text(output::make_record(report(HorosphericalDatum::x5()), 4)));
    auto bad = j;
    bad["R"] = "112/134";
    CHECK_THROWS_AS(output::record_from_json(bad), Error);
    bad = j;
    bad["R"] = "56/67/1";
    CHECK_THROWS_AS(output::record_from_json(bad), Error);
    bad = j;
    bad.erase("dim");
    CHECK_THROWS_AS(output::record_from_json(bad), Error);
    bad = j;
    bad["schema_version"] = 2;
    CHECK_THROWS_AS(output::record_from_json(bad), Error);
    bad = j;
    bad["interval"] = {"-2/1"};
    CHECK_THROWS_AS(output::record_from_json(bad), Error);
}

TEST_CASE("CSV and text renderings") {
    const auto r = output::make_record(report(HorosphericalDatum::x3(7, 4)), 5);
    CHECK(output::csv_header() == "family,n,k,dim,R_decimal,provenance");
    CHECK(output::to_csv_row(r) == "X3,7,4,38,0.95759,engine");
    const std::string text = output::to_text(r);
    CHECK_THAT(text, ContainsSubstring("X3(7,4)"));
    CHECK_THAT(text, ContainsSubstring("429/448"));
    CHECK_THAT(text, ContainsSubstring("informational"));
}

TEST_CASE("table 3 rendering") {
    const std::string text = tables::render_table(3, tables::Format::text);
    CHECK_THAT(text, ContainsSubstring("15/16 = 0.9375"));
    CHECK_THAT(text, ContainsSubstring("7/8 = 0.875"));
    CHECK_THAT(text, ContainsSubstring("3003/4096 ≈ 0.733"));
    CHECK_THAT(text, ContainsSubstring("715/1024 ≈ 0.698"));
    const auto j = nlohmann::json::parse(tables::render_table(3, tables::Format::json, 6));
    CHECK(j["rows"][4]["R"] == "3003/4096");
    CHECK(j["rows"][4]["R_decimal"] == "0.733154");
    CHECK_THAT(tables::render_table(3, tables::Format::csv), ContainsSubstring("n,R_decimal\n2,0.938\n"));
}

TEST_CASE("table 1 rendering") {
    const std::string text = tables::render_table(1, tables::Format::text);
    CHECK_THAT(text, ContainsSubstring("20/21 ≈ 0.952"));
    CHECK_THAT(text, ContainsSubstring("56/67 ≈ 0.8358"));
    CHECK_THAT(text, ContainsSubstring("178992099/243545402"));
    CHECK_THAT(text, ContainsSubstring("k(4n-3k+3)/2"));
    const auto rows = tables::compute_table1();
    CHECK(rows.size() == 6);
}

TEST_CASE("table 2 on a reduced grid") {
    const std::array<int, 4> grid{3, 4, 5, 6};
    const auto t = tables::compute_table2(grid);
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[0].cells[0] == make_rational(60, 67));
    CHECK_FALSE(t.rows[3].cells[0].has_value());
    CHECK(t.rows[2].cells[0] == make_rational(7, 8));
    // The X1 row decreases on this stretch.
    for (std::size_t c = 1; c < grid.size(); ++c) {
        CHECK(*t.rows[0].cells[c] < *t.rows[0].cells[c - 1]);
    }
}

TEST_CASE("format and suite parsing") {
    CHECK(tables::parse_format("csv") == tables::Format::csv);
    CHECK_FALSE(tables::parse_format("xml").has_value());
    CHECK(verify::parse_suite("closed-forms") == verify::Suite::closed_forms);
    CHECK_FALSE(verify::parse_suite("all").has_value());
    CHECK_THROWS_AS(tables::render_table(4, tables::Format::text), Error);
}

TEST_CASE("verification suites pass on small grids") {
    for (auto suite : {verify::Suite::lemmas, verify::Suite::closed_forms, verify::Suite::oracle,
                       verify::Suite::bounds}) {
        const auto report = verify::run_verify(suite, 6);
        INFO(verify::to_text(report));
        CHECK(report.passed());
        CHECK_FALSE(report.checks.empty());
        const auto j = verify::to_json(report);
        CHECK(j["passed"] == true);
        CHECK(j["checks"].size() == report.checks.size());
    }
    CHECK_THROWS_AS(verify::run_verify(verify::Suite::lemmas, 2), Error);
    CHECK_THROWS_AS(verify::run_verify(verify::Suite::oracle, 21), Error);
}
