#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asreg/report.hpp"
#include "support.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace asreg;
using namespace asreg::testing;

namespace {

// File name derived from what determines the report: table, row, bindings, field.
std::string golden_name(const VerificationReport& r) {
    std::string name = r.table + "_" + id_of(r.type);
    for (const auto& [param, value] : r.bindings) name += "_" + param + "=" + value.str();
    name += "_" + r.field.name() + ".json";
    for (char& c : name)
        if (c == '/' || c == ':' || c == '*') c = '-';
    return name;
}

// Compares against the stored snapshot; ASREG_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& actual) {
    const std::string path = std::string(ASREG_GOLDEN_DIR) + "/" + name;
    if (std::getenv("ASREG_UPDATE_GOLDEN")) {
        std::ofstream(path) << actual;
        return;
    }
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
    std::stringstream expected;
    expected << in.rdbuf();
    CHECK(expected.str() == actual);
}

}  // namespace

TEST_CASE("per-row golden reports") {
    const FieldSpec cyclo = FieldSpec::cyclotomic3();
    const std::vector<VerificationReport> reports{
        verify_row(TypeId::P1, {{"a", 1}, {"b", 2}, {"c", 3}}),
        verify_row(TypeId::T2, {{"a", 1}, {"b", 1}, {"c", 1}}),
        verify_row(TypeId::S1, {{"a", 1}, {"b", 8}, {"c", 27}}),
        verify_row(TypeId::WL2, {{"c", 0}}),
        verify_row(TypeId::TL1, {{"a", 2}}, large_prime),
        verify_table2(TypeId::P1, {{"a", Scalar::zeta3()}}, cyclo),
        verify_table2(TypeId::WL2, {}),
        verify_table3(TypeId::T1, {{"a", 1}, {"b", 2}, {"c", 4}}),
    };
    for (const VerificationReport& r : reports) {
        CAPTURE(golden_name(r));
        check_golden(golden_name(r), dump(to_json(r)));
    }
}

TEST_CASE("sweep golden report") {
    SweepOptions options;
    options.only = TypeId::T1;
    check_golden("sweep_table1_T1_seed0_count3_q.json", dump(sweep_json(options, sweep(options))));
}

TEST_CASE("report schema") {
    const VerificationReport r = verify_row(TypeId::P1, {{"a", 1}, {"b", 2}, {"c", 3}});
    const Json j = to_json(r);
    CHECK_FALSE(j.contains("milliseconds"));
    CHECK(to_json(r, ReportOptions{true}).contains("milliseconds"));
    CHECK(j["stages"].size() == 6);
    CHECK(j["passed"] == true);

    SweepOptions options;
    options.only = TypeId::P1;
    options.count = 1;
    const Json s = sweep_json(options, sweep(options));
    CHECK(s["schema_version"] == report_schema_version);
    CHECK(s["command"] == "verify");
    CHECK(s["ok"] == true);
    CHECK(s["result"]["instances"] == 1);
    CHECK(dump(s) == dump(sweep_json(options, sweep(options))));
    CHECK(dump(s).back() == '\n');
}

TEST_CASE("failures carry the first differing object") {
    const Json j = to_json(verify_row(TypeId::T2, {{"a", 1}, {"b", 1}, {"c", 1}}));
    CHECK(j["passed"] == false);
    CHECK(j["stages"][1]["name"] == "witness");
    CHECK(j["stages"][1]["passed"] == false);
    CHECK_FALSE(j["stages"][1]["detail"].get<std::string>().empty());
}

TEST_CASE("markdown rendering") {
    const VerificationReport r = verify_row(TypeId::P1, {{"a", 1}, {"b", 2}, {"c", 3}});
    const std::string md = to_markdown(r);
    CHECK(md.find("### table1 P1 (a = 1, b = 2, c = 3) over q: pass") == 0);
    CHECK(md.find("| nakayama | pass |") != std::string::npos);
    CHECK(sweep_markdown({r, r}).find("2/2 instances pass") != std::string::npos);
}
