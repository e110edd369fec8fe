#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asreg/catalog.hpp"
#include "asreg/errors.hpp"
#include "asreg/parse.hpp"
#include "support.hpp"

using namespace asreg;
using namespace asreg::testing;

TEST_CASE("potential grammar") {
    const Tensor w = parse_potential("x*y*z + y*z*x + z*x*y - x*z*y - z*y*x - y*x*z");
    CHECK(w.degree() == 3);
    CHECK(w.terms().size() == 6);
    CHECK(w.coeff(Word::parse("xzy")) == Scalar(-1));
    CHECK(is_superpotential(w));

    const Tensor r = parse_potential("a*y*z + b*z*y + c*x*x", {{"a", 2}, {"b", 3}, {"c", 5}});
    CHECK(r == parse_potential("2*y*z + 3*z*y + 5*x*x"));
    CHECK(parse_potential("x^2*y") == parse_potential("x*x*y"));
    CHECK(parse_potential("1/3*y^2*x - 2/3*x*y*y") == parse_potential("-2/3*x*y*y + 1/3*y*y*x"));
    CHECK(parse_potential("x*y*z  # trailing comment\n - z*y*x") == parse_potential("x*y*z - z*y*x"));
    CHECK(parse_potential("a/b*x*y", {{"a", 1}, {"b", 4}}) == parse_potential("1/4*x*y"));
    CHECK(parse_potential("x*y - x*y").is_zero());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_potential("x*y + x*y*z"), MixedDegree);
    CHECK_THROWS_AS(parse_potential("a*x*y"), UnboundParameter);
    CHECK_THROWS_AS(parse_potential("x*y +"), SyntaxError);
    CHECK_THROWS_AS(parse_potential("x*w*z"), UnboundParameter);
    CHECK_THROWS_AS(parse_potential("x**y"), SyntaxError);
    try {
        parse_potential("x*y*z + 2*(x*y*z");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("scalar expressions") {
    CHECK(evaluate("(1+2)^2/3", {}) == Scalar(3));
    CHECK(evaluate("cbrt(-27/8)", {}) == Scalar::rational(-3, 2));
    CHECK_THROWS_AS(evaluate("cbrt(2)", {}), CubeRootUnavailable);
    CHECK(evaluate("zeta^3", {}, FieldSpec::cyclotomic3()) == Scalar(1).in(FieldSpec::cyclotomic3()));
    CHECK(evaluate("3/5", {}, FieldSpec::prime(7)) == Scalar::residue(2, 7));
    CHECK(evaluate("a^-1", {{"a", 4}}) == Scalar::rational(1, 4));
}

TEST_CASE("matrices and bindings") {
    CHECK(parse_matrix("1,0,0,0,a,0,0,0,1/2", {{"a", 3}}) ==
          Matrix::from_rows({{1, 0, 0}, {0, 3, 0}, {0, 0, Scalar::rational(1, 2)}}));
    CHECK_THROWS_AS(parse_matrix("1,2,3"), SyntaxError);
    const Bindings b = parse_bindings({"a=2", "b=a^2"});
    CHECK(b.at("b") == Scalar(4));
    CHECK_THROWS_AS(parse_bindings({"a"}), SyntaxError);
}

// render(parse(t)) reparses to the same tensor for every catalog template.
TEST_CASE("catalog templates round-trip through the printer") {
    Rng rng(2);
    for (TypeId type : all_types()) {
        CAPTURE(id_of(type));
        const CatalogRow& row = table1_row(type);
        const Bindings b = sample_binding(type, rng);
        std::vector<std::string> templates{row.potential, row.table3.w0};
        templates.insert(templates.end(), row.relations.begin(), row.relations.end());
        for (const std::string& text : templates) {
            const Tensor parsed = parse_potential(text, b);
            CHECK(parse_potential(parsed.str()) == parsed);
        }
    }
    for (TypeId type : table2_types()) {
        const FieldSpec f = type == TypeId::P1 ? FieldSpec::cyclotomic3() : FieldSpec::rationals();
        const Table2Row& row = table2_row(type);
        const Bindings b = sample_table2_binding(type, rng, f);
        const Tensor parsed = parse_potential(row.w0, b, f);
        CHECK(parse_potential(parsed.str(), {}, f) == parsed);
    }
}
