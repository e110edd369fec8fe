#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asreg/catalog.hpp"
#include "asreg/errors.hpp"
#include "asreg/parse.hpp"
#include "asreg/quadratic.hpp"
#include "asreg/report.hpp"
#include "support.hpp"

using namespace asreg;
using namespace asreg::testing;

namespace {

std::string violation(TypeId t, const Bindings& b) {
    try {
        instantiate(t, b);
    } catch (const ConditionViolated& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("type names") {
    CHECK(all_types().size() == type_count);
    CHECK(id_of(TypeId::S1p) == "S1p");
    CHECK(display_name(TypeId::S1p) == "S'1");
    CHECK(parse_type("S'1") == TypeId::S1p);
    CHECK(parse_type("Tp") == TypeId::Tp);
    CHECK_THROWS_AS(parse_type("EC"), UnknownType);
}

TEST_CASE("every table cell is encoded") {
    for (TypeId t : all_types()) {
        CAPTURE(id_of(t));
        const CatalogRow& row = table1_row(t);
        CHECK(row.type == t);
        CHECK_FALSE(row.potential.empty());
        for (const std::string& r : row.relations) CHECK_FALSE(r.empty());
        for (const std::string& e : row.nakayama) CHECK_FALSE(e.empty());
        CHECK_FALSE(row.table3.w0.empty());
        for (const std::string& e : row.table3.theta) CHECK_FALSE(e.empty());
        for (const std::string& e : row.table3.g) CHECK_FALSE(e.empty());
    }
    const std::vector<TypeId> cy{TypeId::P1, TypeId::S1, TypeId::S3, TypeId::S1p, TypeId::T1, TypeId::T3,
                                 TypeId::Tp, TypeId::CC, TypeId::NC1, TypeId::WL2, TypeId::TL1};
    CHECK(table2_types() == cy);
    for (TypeId t : {TypeId::P2, TypeId::P3, TypeId::S2, TypeId::S2p, TypeId::T2, TypeId::NC2, TypeId::WL1,
                     TypeId::WL3, TypeId::TL2, TypeId::TL3, TypeId::TL4})
        CHECK_THROWS_AS(table2_row(t), NoTable2Row);

    const std::string tables = render_tables();
    for (TypeId t : all_types()) CHECK(tables.find("| " + display_name(t) + " |") != std::string::npos);
}

TEST_CASE("instantiation") {
    const Instance p1 = instantiate(TypeId::P1, {{"a", 1}, {"b", 2}, {"c", 3}});
    CHECK(p1.potential == parse_potential("2*x*y*z + 12*y*z*x + 9*z*x*y - 3*x*z*y - 18*z*y*x - 4*y*x*z"));

    CHECK(violation(TypeId::S3, {{"a", 1}, {"b", 1}, {"c", 1}}).find("a*b*c != 0,1") != std::string::npos);
    CHECK(violation(TypeId::T1, {{"a", 0}, {"b", 0}, {"c", 0}}).find("a+b+c != 0") != std::string::npos);
    CHECK(violation(TypeId::P1, {{"a", 0}, {"b", 2}, {"c", 3}}).find("a*b*c != 0") != std::string::npos);
    CHECK_THROWS_AS(instantiate(TypeId::P1, {{"a", 1}, {"b", 2}}), UnboundParameter);

    // The condition is also checked after reduction into the target field.
    const FieldSpec f = FieldSpec::prime(1009);
    CHECK_THROWS_AS(instantiate(TypeId::T1, {{"a", 1000}, {"b", 8}, {"c", 1}}, f), ConditionViolated);
}

TEST_CASE("single-row verification") {
    const VerificationReport t2 = verify_row(TypeId::T2, {{"a", 1}, {"b", 1}, {"c", 1}});
    REQUIRE(t2.stages.size() == 6);
    for (const StageOutcome& s : t2.stages) {
        CAPTURE(s.name);
        // The printed T2 potential admits no twisted-superpotential witness.
        CHECK(s.passed == (s.name != "witness"));
    }
    // Last row of theta is (-(-a+2b-c), -(2a-b-c), -(a+b+c)) / (a+b+c).
    CHECK(t2.stage("table3")->data["theta"][2] == Json::array({"0", "0", "-1"}));

    const VerificationReport s3 = verify_row(TypeId::S3, {{"a", 2}, {"b", 3}, {"c", 5}});
    REQUIRE(s3.stage("nakayama") != nullptr);
    CHECK(s3.stage("nakayama")->passed);
    CHECK(s3.stage("regularity")->passed);
    // Table 3 for S3 needs cube roots of abc, which 30 does not have.
    CHECK_FALSE(s3.stage("table3")->passed);
    CHECK(s3.stage("table3")->detail.find("CubeRootUnavailable") != std::string::npos);

    const VerificationReport wl2 = verify_row(TypeId::WL2, {{"c", 0}});
    CHECK(wl2.passed());
    CHECK(wl2.stage("table3")->data["w0"] == parse_potential(table2_row(TypeId::WL2).w0).str());
}

TEST_CASE("Table 2 rows are Calabi-Yau") {
    CHECK(verify_table2(TypeId::S1, {{"a", 2}}).passed());
    const FieldSpec cyclo = FieldSpec::cyclotomic3();
    CHECK(verify_table2(TypeId::P1, {{"a", Scalar::zeta3()}}, cyclo).passed());
    CHECK(verify_table2(TypeId::TL1, {{"a", 1}}).passed());
    CHECK_THROWS_AS(verify_table2(TypeId::P2, {{"a", 1}}), NoTable2Row);
}

TEST_CASE("sweep options") {
    SweepOptions none;
    none.count = 0;
    CHECK(sweep(none).empty());

    SweepOptions small;
    small.field = FieldSpec::prime(7);
    CHECK_THROWS_AS(sweep(small), InvalidField);
}

TEST_CASE("sweeps are deterministic and independent of row selection") {
    SweepOptions all;
    all.count = 2;
    all.seed = 5;
    const std::vector<VerificationReport> first = sweep(all);
    const std::vector<VerificationReport> second = sweep(all);
    REQUIRE(first.size() == 2 * type_count);
    for (std::size_t k = 0; k < first.size(); ++k)
        CHECK(dump(to_json(first[k])) == dump(to_json(second[k])));

    SweepOptions only = all;
    only.only = TypeId::NC1;
    const std::vector<VerificationReport> single = sweep(only);
    const std::size_t offset = 2 * static_cast<std::size_t>(TypeId::NC1);
    REQUIRE(single.size() == 2);
    CHECK(single[0].bindings == first[offset].bindings);
    CHECK(single[1].bindings == first[offset + 1].bindings);
}

TEST_CASE("Table 1 over the rationals and a large prime field") {
    for (const FieldSpec& f : {FieldSpec::rationals(), large_prime}) {
        CAPTURE(f.name());
        SweepOptions options;
        options.field = f;
        for (const VerificationReport& r : sweep(options)) {
            CAPTURE(id_of(r.type));
            for (const StageOutcome& s : r.stages) {
                CAPTURE(s.name);
                CAPTURE(s.detail);
                CHECK(s.passed == !(r.type == TypeId::T2 && s.name == "witness"));
            }
        }
    }
}

TEST_CASE("Table 2 in every field") {
    for (const FieldSpec& f : all_fields()) {
        CAPTURE(f.name());
        SweepOptions options;
        options.table = TableChoice::table2;
        options.field = f;
        const auto reports = sweep(options);
        CHECK(reports.size() == 33);
        for (const VerificationReport& r : reports) {
            CAPTURE(id_of(r.type));
            CHECK(r.passed());
        }
    }
}

// Zhang twisting D(w0) by theta gives D(w) up to the row's g.
TEST_CASE("Table 3 and the Zhang twist") {
    SweepOptions options;
    options.table = TableChoice::table3;
    for (const VerificationReport& r : sweep(options)) {
        CAPTURE(id_of(r.type));
        CHECK(r.passed());
    }
}
