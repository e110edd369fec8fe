#include "asreg/catalog.hpp"

#include "asreg/errors.hpp"

#include <algorithm>

namespace asreg {

namespace {

using Kind = Condition::Kind;

// "p != 0" for each listed parameter, all under one printed label.
std::vector<Condition> each_nonzero(const std::vector<std::string>& params, const std::string& label) {
    std::vector<Condition> out;
    for (const std::string& p : params) out.push_back({Kind::nonzero, p, label});
    return out;
}

// Conservative reading of "expr != 0,1": every factor nonzero and the
// expression itself different from 1.
std::vector<Condition> not_zero_or_one(const std::string& expr, const std::vector<std::string>& factors) {
    const std::string label = expr + " != 0,1";
    std::vector<Condition> out = each_nonzero(factors, label);
    out.push_back({Kind::not_one, expr, label});
    return out;
}

const std::string comm = "x*y*z + y*z*x + z*x*y - x*z*y - z*y*x - y*x*z";
const std::string comm_plus = "x*y*z + y*z*x + z*x*y + x*z*y + z*y*x + y*x*z";
const std::string t1_cy = comm + " + x^2*y + x*y*x + y*x^2 - y^2*x - y*x*y - x*y^2";
const std::string wl_cy = comm + " - 1/3*y^2*x - 1/3*y*x*y - 1/3*x*y^2";
const std::string tl_cy = comm + " - x^3";
const std::string t3_cy =
    "x*y*z + y*z*x + z*x*y - x^2*y - x*y*x - y*x^2 + x*y^2 + y*x*y + y^2*x - x^2*z - x*z*x - z*x^2"
    " - z*y^2 - y*z*y - y^2*z + x^3 - y^3";
const std::string tp_cy = comm + " + x^2*y + x*y*x + y*x^2 - y^2*z - y*z*y - z*y^2 + y^3";
const std::string cc_cy = comm + " + y^2*x + y*x*y + x*y^2 - y^2*z - y*z*y - z*y^2 + 3*x^3";

using Nine = std::array<std::string, 9>;
const Nine identity{"1", "0", "0", "0", "1", "0", "0", "0", "1"};

Nine diag(const std::string& a, const std::string& b, const std::string& c) {
    return {a, "0", "0", "0", b, "0", "0", "0", c};
}

std::vector<CatalogRow> build_table1() {
    std::vector<CatalogRow> rows;
    rows.push_back({TypeId::P1,
                    {"a", "b", "c"},
                    each_nonzero({"a", "b", "c"}, "a*b*c != 0"),
                    "a^2*b*x*y*z + b^2*c*y*z*x + c^2*a*z*x*y - a^2*c*x*z*y - c^2*b*z*y*x - b^2*a*y*x*z",
                    {"a^2*b*y*z - a^2*c*z*y", "b^2*c*z*x - b^2*a*x*z", "c^2*a*x*y - c^2*b*y*x"},
                    diag("a^2/(b*c)", "b^2/(a*c)", "c^2/(a*b)"),
                    {comm, diag("a", "b", "c"), identity}});
    rows.push_back({TypeId::P2,
                    {"a"},
                    each_nonzero({"a"}, "a != 0"),
                    "x*y*z + a*y*z*x + a^2*z*x*y - a*x*z*y - a^2*z*y*x - y*x*z + y^2*z - 2*a*y*z*y + a^2*z*y^2",
                    {"y*z - a*z*y", "y*z - 2*a*z*y + a*z*x - x*z", "a^2*y^2 + a^2*x*y - a^2*y*x"},
                    {"1/a", "3/a", "0", "0", "1/a", "0", "0", "0", "a^2"},
                    {comm, {"1", "1", "0", "0", "1", "0", "0", "0", "a"}, identity}});
    rows.push_back({TypeId::P3,
                    {},
                    {},
                    "-x*y*z - y*z*x - z*x*y + x*z*y + z*y*x + y*x*z - z^2*x + 2*z*x*z - x*z^2 - z*y^2 + z*y*z"
                    " + z^2*y - y^2*z + 2*y*z*y - 2*y*z^2 - z^3",
                    {"z*y - y*z - z^2", "x*z - y*z - 2*z^2 - z*x + 2*z*y",
                     "-x*y + y*x - y^2 - z*x + 2*x*z + y*z + z*y - z^2"},
                    {"1", "3", "3", "0", "1", "3", "0", "0", "1"},
                    {comm, {"1", "1", "0", "0", "1", "1", "0", "0", "1"}, identity}});
    rows.push_back({TypeId::S1,
                    {"a", "b", "c"},
                    not_zero_or_one("a*b*c", {"a", "b", "c"}),
                    "b*x*y*z + c*y*z*x + a*z*x*y - a*b*x*z*y - a*c*z*y*x - b*c*y*x*z",
                    {"b*y*z - a*b*z*y", "c*z*x - b*c*x*z", "a*x*y - a*c*y*x"},
                    diag("b/c", "c/a", "a/b"),
                    {"x*y*z + y*z*x + z*x*y - cbrt(a*b*c)*x*z*y - cbrt(a*b*c)*z*y*x - cbrt(a*b*c)*y*x*z",
                     diag("cbrt(b/c)", "cbrt(c/a)", "cbrt(a/b)"), identity},
                    Sampling::cubes});
    rows.push_back({TypeId::S2,
                    {"a", "b"},
                    each_nonzero({"a", "b"}, "a*b != 0"),
                    "-y*z*x - x*z*y + 1/b*x^2*z + 1/a*z*x^2 + a*y^2*z + b*z*y^2",
                    {"1/b*x*z - z*y", "a*y*z - z*x", "1/a*x^2 + b*y^2"},
                    {"0", "-a", "0", "-1/b", "0", "0", "0", "0", "b/a"},
                    {comm_plus, {"0", "-cbrt(a^2*b)", "0", "-1/cbrt(a*b^2)", "0", "0", "0", "0", "cbrt(b/a)"}, identity},
                    Sampling::cubes});
    rows.push_back({TypeId::S3,
                    {"a", "b", "c"},
                    not_zero_or_one("a*b*c", {"a", "b", "c"}),
                    "-x*z*y - z*y*x - y*x*z + b*x^3 + c*y^3 + a*z^3",
                    {"b*x^2 - z*y", "c*y^2 - x*z", "a*z^2 - y*x"},
                    identity,
                    {"x*z*y + z*y*x + y*x*z - cbrt(a*b*c)*x^3 - cbrt(a*b*c)*y^3 - cbrt(a*b*c)*z^3", identity,
                     diag("cbrt(b/a)", "cbrt(c/a)", "1")},
                    Sampling::cubes});
    rows.push_back({TypeId::S1p,
                    {"a", "b"},
                    not_zero_or_one("a*b^2", {"a", "b"}),
                    "b*x*y*z + b*y*z*x + a*z*x*y - a*b*x*z*y - a*b*z*y*x - b^2*y*x*z + b*x^3",
                    {"b*x^2 + b*y*z - a*b*z*y", "b*z*x - b^2*x*z", "a*x*y - a*b*y*x"},
                    diag("1", "b/a", "a/b"),
                    {"x*y*z + y*z*x + z*x*y - cbrt(a*b^2)*x*z*y - cbrt(a*b^2)*z*y*x - cbrt(a*b^2)*y*x*z + x^3",
                     diag("1", "cbrt(b/a)", "cbrt(a/b)"), diag("1", "1/cbrt(b/a)", "1")},
                    Sampling::cubes});
    rows.push_back({TypeId::S2p,
                    {},
                    {},
                    "-z*x*y - y*x*z + x*y^2 + y^2*x + x*z^2 + z^2*x + x^3",
                    {"x^2 + y^2 + z^2", "y*x - x*z", "z*x - x*y"},
                    {"1", "0", "0", "0", "0", "-1", "0", "-1", "0"},
                    {comm_plus + " + x^3", {"1", "0", "0", "0", "0", "1", "0", "1", "0"},
                     {"1", "0", "0", "0", "0", "1", "0", "-1", "0"}}});
    rows.push_back({TypeId::T1,
                    {"a", "b", "c"},
                    {{Kind::nonzero, "a+b+c", "a+b+c != 0"}},
                    "b*x^2*y + (a-b+c)*x*y*x + (a-b-c)*y*x*y - a*y^2*x - y*x*z + y*z*x + b*y*x^2 + x*y*z - x*z*y"
                    " - a*x*y^2 + z*x*y - z*y*x",
                    {"b*x*y + (a-b+c)*y*x + y*z - z*y - a*y^2", "(a-b-c)*x*y - a*y*x - x*z + z*x + b*x^2",
                     "x*y - y*x"},
                    {"1", "0", "0", "0", "1", "0", "-a+2*b-c", "2*a-b-c", "1"},
                    {t1_cy, {"1", "0", "0", "0", "1", "0", "(-a+2*b-c)/(a+b+c)", "(2*a-b-c)/(a+b+c)", "1"},
                     diag("1", "1", "3/(a+b+c)")}});
    rows.push_back({TypeId::T2,
                    {"a", "b", "c"},
                    {{Kind::nonzero, "a+b+c", "a+b+c != 0"}},
                    "(1-b-c)*x^3 - (a+2*c)*y*x^2 + z*x^2 - x*y^2 + c*y^3 - z*y^2 - x^2*z + x*z*y + b*x^2*y"
                    " - y^2*z + y*z*x + a*y^2*x",
                    {"(1-b-c)*x^2 - y^2 - x*z + z*y + b*x*y", "-(a+2*c)*x^2 + c*y^2 - y*z + z*x + a*y*x",
                     "x^2 - y^2"},
                    {"0", "-1", "0", "-1", "0", "0", "-b+c", "-a+c", "-1"},
                    {t1_cy, {"0", "-1", "0", "-1", "0", "0", "-(-a+2*b-c)/(a+b+c)", "-(2*a-b-c)/(a+b+c)", "-1"},
                     diag("1", "1", "3/(a+b+c)")}});
    rows.push_back({TypeId::T3,
                    {},
                    {},
                    "-x^3 + y^3 + x^2*y + x*y*x + y*x^2 - x*y^2 - y*x*y - y^2*x + x^2*z + x*z*x + z*x^2 + z*y^2"
                    " + y*z*y + y^2*z - x*y*z - y*z*x - z*x*y",
                    {"-x^2 + x*y + y*x - y^2 + x*z + z*x - y*z", "y^2 + x^2 - x*y - y*x + z*y + y*z - z*x",
                     "x^2 + y^2 - x*y"},
                    identity,
                    {t3_cy, identity, identity}});
    rows.push_back({TypeId::Tp,
                    {"a", "b"},
                    {{Kind::nonzero, "a+2*b", "a+2*b != 0"}},
                    "a*x^2*y - (a-2*b)*x*y*x + (b^2-a*b)*x*y^2 + x*y*z - x*z*y + a*y*x^2 - y*x*z + y*z*x"
                    " - a*y*z*y + a*b^2*y^3 - (b^2-a*b)*y^2*x - b*y^2*z + z*x*y - z*y*x - b*z*y^2",
                    {"a*x*y - (a-2*b)*y*x + (b^2-a*b)*y^2 + y*z - z*y",
                     "a*x^2 - x*z + z*x - a*z*y + a*b^2*y^2 - (b^2-a*b)*y*x - b*y*z", "x*y - y*x - b*y^2"},
                    {"1", "a-b", "0", "0", "1", "0", "2*(a-b)", "(a-b)^2", "1"},
                    {tp_cy,
                     {"1", "(a-b)/(a+2*b)", "0", "0", "1", "0", "2*(a-b)/(a+2*b)", "((a-b)/(a+2*b))^2", "1"},
                     diag("3/(a+2*b)", "1", "9/(a+2*b)^2")}});
    rows.push_back({TypeId::CC,
                    {},
                    {},
                    "-3*x^3 - y^2*x - y*x*y - x*y^2 + y^2*z + y*z*y + z*y^2 - x*y*z - y*z*x - z*x*y + x*z*y"
                    " + z*y*x + y*x*z",
                    {"-3*x^2 - y^2 - y*z + z*y", "-y*x - x*y + y*z + z*y - z*x + x*z", "y^2 - x*y + y*x"},
                    identity,
                    {cc_cy, identity, identity}});
    rows.push_back({TypeId::NC1,
                    {"a"},
                    not_zero_or_one("a^3", {"a"}),
                    "(1-a^3)/a*x^3 + (1-a^3)/a*y^3 + x*y*z + y*z*x + z*x*y - a*x*z*y - a*z*y*x - a*y*x*z",
                    {"(1-a^3)/a*x^2 + y*z - a*z*y", "(1-a^3)/a*y^2 + z*x - a*x*z", "x*y - a*y*x"},
                    identity,
                    {"x*y*z + y*z*x + z*x*y - a*x*z*y - a*z*y*x - a*y*x*z + x^3 + y^3", identity,
                     diag("1", "1", "a/(1-a^3)")}});
    rows.push_back({TypeId::NC2,
                    {},
                    {},
                    "-2*x*y*x + x^2*z + z*x^2 - 2*y*x*y + y^2*z + z*y^2 + y*z*x + x*z*y",
                    {"-2*y*x + x*z + z*y", "-2*x*y + y*z + z*x", "x^2 + y^2"},
                    {"0", "1", "0", "1", "0", "0", "0", "0", "1"},
                    {comm_plus + " + x^3 + y^3", {"0", "1", "0", "1", "0", "0", "0", "0", "1"},
                     diag("1", "1", "-1/2")}});
    rows.push_back({TypeId::WL1,
                    {"a", "c"},
                    not_zero_or_one("a", {"a"}),
                    "-(1+c)*y^2*x + a*(1+2*c)*y*x*y - a^2*(1+c)*x*y^2 + a^2*x*y*z + y*z*x + a*z*x*y - a^2*x*z*y"
                    " - z*y*x - a*y*x*z",
                    {"-a^2*(1+c)*y^2 + a^2*y*z - a^2*z*y", "-(1+c)*y*x + a*(1+2*c)*x*y + z*x - a*x*z",
                     "a*x*y - y*x"},
                    {"a^2", "0", "0", "0", "1/a", "0", "0", "(2+3*c)/a", "1/a"},
                    {wl_cy, {"a", "0", "0", "0", "1", "0", "0", "2/3+c", "1"}, identity}});
    rows.push_back({TypeId::WL2,
                    {"c"},
                    {},
                    "-(1+c)*y^2*x + (1+2*c)*y*x*y - (1+c)*x*y^2 + x*y*z + y*z*x + z*x*y - x*z*y - z*y*x - y*x*z",
                    {"-(1+c)*y^2 + y*z - z*y", "-(1+c)*y*x + (1+2*c)*x*y + z*x - x*z", "x*y - y*x"},
                    {"1", "0", "0", "0", "1", "0", "0", "2+3*c", "1"},
                    {wl_cy, {"1", "0", "0", "0", "1", "0", "0", "2/3+c", "1"}, identity}});
    rows.push_back({TypeId::WL3,
                    {"c"},
                    {},
                    "x^2*y - 2*x*y*x + y*x^2 - (1+c)*y^2*x + (1+2*c)*y*x*y - (1+c)*x*y^2 + x*y*z + y*z*x + z*x*y"
                    " - x*z*y - z*y*x - y*x*z",
                    {"x*y - 2*y*x - (1+c)*y^2 + y*z - z*y", "x^2 - (1+c)*y*x + (1+2*c)*x*y + z*x - x*z",
                     "x*y - y*x"},
                    {"1", "0", "0", "0", "1", "0", "3", "2+3*c", "1"},
                    {wl_cy, {"1", "0", "0", "0", "1", "0", "1", "2/3+c", "1"}, identity}});
    rows.push_back({TypeId::TL1,
                    {"a"},
                    each_nonzero({"a"}, "a != 0"),
                    "-1/a^2*z*x*y + 1/a*z*y*x + a^2*y*x*z - a*y*z*x + 1/a*x*z*y - a*x*y*z - x^3",
                    {"1/a*z*y - a*y*z - x^2", "a^2*x*z - a*z*x", "-1/a^2*x*y + 1/a*y*x"},
                    diag("1", "a^3", "1/a^3"),
                    {tl_cy, diag("1", "a", "1/a"), diag("1", "1", "-1")}});
    rows.push_back({TypeId::TL2,
                    {"b"},
                    {},
                    "b*x^2*y + b*x*y*x + (-b^2-1)*x^3 + 2*y*x*y - y^2*x - 2*b*y*x^2 + z*x*y - z*y*x - b*z*x^2"
                    " - b*x^2*z + 2*b*x*z*x - y*x*z + y*z*x - x*z*y + x*y*z - x*y^2",
                    {"b*x*y + b*y*x + (-b^2-1)*x^2 - b*x*z + 2*b*z*x - z*y + y*z - y^2",
                     "2*x*y - y*x - 2*b*x^2 - x*z + z*x", "x*y - y*x - b*x^2"},
                    {"1", "0", "0", "3*b", "1", "0", "3*b", "3", "1"},
                    {tl_cy, {"1", "0", "0", "b", "1", "0", "0", "1", "1"}, identity}});
    rows.push_back({TypeId::TL3,
                    {},
                    {},
                    "-2*y*x*y - y^2*x + z*x*y + z*y*x - y*x*z - y*z*x + x*z*y - x*y*z - x^3 - x*y^2",
                    {"z*y - y*z - x^2 - y^2", "-2*x*y - y*x - x*z - z*x", "x*y + y*x"},
                    {"1", "0", "0", "0", "-1", "0", "0", "3", "-1"},
                    {tl_cy, {"1", "0", "0", "0", "-1", "0", "0", "1", "-1"}, identity}});
    rows.push_back({TypeId::TL4,
                    {},
                    {},
                    "-x^3 + y*x^2 + x^2*y - 2*x*y*x + z*x*y + x*y*z + y*z*x - z*y*x - y*x*z - x*z*y",
                    {"-x^2 + x*y - 2*y*x + y*z - z*y", "x^2 + z*x - x*z", "x*y - y*x"},
                    {"1", "0", "0", "0", "1", "0", "3", "0", "1"},
                    {tl_cy, {"1", "0", "0", "0", "1", "0", "1", "0", "1"}, identity}});
    return rows;
}

std::vector<Table2Row> build_table2() {
    const std::string comm_a = "x*y*z + y*z*x + z*x*y - a*x*z*y - a*z*y*x - a*y*x*z";
    const std::array<std::string, 3> skew{"y*z - a*z*y", "z*x - a*x*z", "x*y - a*y*x"};
    std::vector<Table2Row> rows;
    rows.push_back({TypeId::P1, {"a"}, {{Kind::equals_one, "a^3", "a^3 = 1"}}, comm_a, skew});
    rows.push_back({TypeId::S1, {"a"}, not_zero_or_one("a^3", {"a"}), comm_a, skew});
    rows.push_back({TypeId::S3,
                    {"a"},
                    not_zero_or_one("a", {"a"}),
                    "x*z*y + z*y*x + y*x*z - a*x^3 - a*y^3 - a*z^3",
                    {"z*y - a*x^2", "x*z - a*y^2", "y*x - a*z^2"}});
    rows.push_back({TypeId::S1p,
                    {"a"},
                    not_zero_or_one("a^3", {"a"}),
                    comm_a + " + x^3",
                    {"y*z - a*z*y + x^2", "z*x - a*x*z", "x*y - a*y*x"}});
    rows.push_back({TypeId::T1,
                    {},
                    {},
                    t1_cy,
                    {"y*z - z*y + x*y + y*x - y^2", "z*x - x*z + x^2 - y*x - x*y", "x*y - y*x"}});
    rows.push_back({TypeId::T3,
                    {},
                    {},
                    t3_cy,
                    {"y*z - x*y - y*x + y^2 - x*z - z*x + x^2", "z*x - x^2 + x*y + y*x - z*y - y*z - y^2",
                     "x*y - x^2 - y^2"}});
    rows.push_back({TypeId::Tp,
                    {},
                    {},
                    tp_cy,
                    {"y*z - z*y + x*y + y*x", "z*x - x*z + x^2 - y*z - z*y + y^2", "x*y - y*x - y^2"}});
    rows.push_back({TypeId::CC,
                    {},
                    {},
                    cc_cy,
                    {"y*z - z*y + y^2 + 3*x^2", "z*x - x*z + y*x + x*y - y*z - z*y", "x*y - y*x - y^2"}});
    rows.push_back({TypeId::NC1,
                    {"a"},
                    not_zero_or_one("a^3", {"a"}),
                    comm_a + " + x^3 + y^3",
                    {"y*z - a*z*y + x^2", "z*x - a*x*z + y^2", "x*y - a*y*x"}});
    rows.push_back({TypeId::WL2,
                    {},
                    {},
                    wl_cy,
                    {"y*z - z*y - 1/3*y^2", "z*x - x*z - 1/3*y*x - 1/3*x*y", "x*y - y*x"}});
    rows.push_back({TypeId::TL1,
                    {"a"},
                    {{Kind::equals_one, "a^3", "a^3 = 1"}},
                    comm_a + " - x^3",
                    {"y*z - a*z*y - x^2", "z*x - a*x*z", "x*y - a*y*x"}});
    return rows;
}

const std::vector<CatalogRow>& table1() {
    static const std::vector<CatalogRow> rows = build_table1();
    return rows;
}

const std::vector<Table2Row>& table2() {
    static const std::vector<Table2Row> rows = build_table2();
    return rows;
}

}  // namespace

const CatalogRow& table1_row(TypeId t) { return table1()[static_cast<std::size_t>(t)]; }

const Table2Row& table2_row(TypeId t) {
    for (const Table2Row& r : table2())
        if (r.type == t) return r;
    throw NoTable2Row(display_name(t) + " has no Calabi-Yau row; its w0 is another row's");
}

std::vector<TypeId> table2_types() {
    std::vector<TypeId> out;
    for (const Table2Row& r : table2()) out.push_back(r.type);
    return out;
}

}  // namespace asreg
