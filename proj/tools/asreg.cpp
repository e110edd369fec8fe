#include "asreg/catalog.hpp"
#include "asreg/errors.hpp"
#include "asreg/hesse.hpp"
#include "asreg/parse.hpp"
#include "asreg/quadratic.hpp"
#include "asreg/regularity.hpp"
#include "asreg/report.hpp"
#include "asreg/tensor.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace asreg;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, parse_error = 3 };

struct Globals {
    std::string field_text = "q";
    bool json = false;
    std::uint64_t seed = 0;
    std::vector<std::string> binds;

    FieldSpec field() const { return FieldSpec::parse(field_text); }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json tensors_json(const std::vector<Tensor>& ts) {
    Json out = Json::array();
    for (const Tensor& t : ts) out.push_back(t.str());
    return out;
}

int emit(const Globals& g, const std::string& command, bool passed, Json result, const std::string& text) {
    if (g.json)
        std::cout << dump(envelope(command, g.field(), passed, std::move(result)));
    else
        std::cout << text;
    return passed ? Exit::ok : Exit::failed;
}

// Reads FILE in the potential grammar with the global bindings and field.
Tensor load_potential(const Globals& g, const std::string& path) {
    const FieldSpec f = g.field();
    return parse_potential(read_input(path), parse_bindings(g.binds, f), f);
}

int check_sp(const Globals& g, const std::string& path) {
    const Tensor w = load_potential(g, path);
    const bool sp = is_superpotential(w);
    Json r;
    r["potential"] = w.str();
    r["superpotential"] = sp;
    if (!sp) r["cyclic"] = cyclic(w).str();
    return emit(g, "check-sp", sp, r, sp ? "superpotential\n" : "not a superpotential: phi(w) = " + cyclic(w).str() + "\n");
}

std::string witness_status(WitnessResult::Status s) {
    switch (s) {
        case WitnessResult::Status::found: return "found";
        case WitnessResult::Status::none: return "none";
        case WitnessResult::Status::undetermined_invertibility: return "undetermined";
    }
    return "none";
}

int check_tsp(const Globals& g, const std::string& path) {
    const WitnessResult r = twisted_witness(load_potential(g, path));
    Json j;
    j["status"] = witness_status(r.status);
    j["solution_dimension"] = r.solution_dimension;
    j["theta_prime"] = r.theta ? matrix_json(*r.theta) : Json(nullptr);
    std::string text = r.found() ? "theta' = " + r.theta->str() + "\n" : "none\n";
    if (r.status == WitnessResult::Status::undetermined_invertibility)
        text = "none (solutions exist, none of the searched candidates is invertible)\n";
    return emit(g, "check-tsp", r.found(), j, text);
}

int twist(const Globals& g, const std::string& path, const std::string& theta_text) {
    const FieldSpec f = g.field();
    const Tensor w = load_potential(g, path);
    const LinearMap theta = parse_matrix(theta_text, parse_bindings(g.binds, f), f);
    const Tensor t = ms_twist(w, theta);
    Json j;
    j["potential"] = w.str();
    j["theta"] = matrix_json(theta);
    j["twisted"] = t.str();
    return emit(g, "twist", true, j, t.str() + "\n");
}

int dqa(const Globals& g, const std::string& path) {
    const QuadraticAlgebra a = derivation_quotient(load_potential(g, path));
    std::string text;
    const char* names[] = {"w_x", "w_y", "w_z"};
    for (std::size_t i = 0; i < a.relations().size(); ++i) text += std::string(names[i]) + " = " + a.relations()[i].str() + "\n";
    Json j;
    j["relations"] = tensors_json(a.relations());
    return emit(g, "dqa", true, j, text);
}

int regular(const Globals& g, const std::string& path) {
    const Tensor w = load_potential(g, path);
    Json j;
    std::ostringstream text;
    RegularityReport r;
    try {
        r = as_regular_check(derivation_quotient(w));
    } catch (const DegeneratePotential& e) {
        r.verdict = Verdict::degenerate_relations;
        text << "relations: dependent partials (" << e.what() << ")\n";
    }
    text << "relation dimension: " << r.relation_dimension << "\n";
    text << "standard: " << (r.standard ? "yes" : "no") << "\n";
    Json minors = Json::array();
    for (const CommPoly& m : r.minors) minors.push_back(m.str());
    Json gb = Json::array();
    for (const CommPoly& p : r.groebner.generators) gb.push_back(p.str());
    if (r.standard) {
        text << "standard basis: ";
        for (std::size_t i = 0; i < r.standard_basis.size(); ++i) text << (i ? "; " : "") << r.standard_basis[i].str();
        text << "\nminors: ";
        for (std::size_t i = 0; i < r.minors.size(); ++i) text << (i ? "; " : "") << r.minors[i].str();
        text << "\ngroebner basis: ";
        for (std::size_t i = 0; i < r.groebner.generators.size(); ++i)
            text << (i ? "; " : "") << r.groebner.generators[i].str();
        text << "\nminor locus empty: " << (r.locus_empty ? "yes" : "no") << "\n";
    }
    text << to_string(r.verdict) << "\n";
    j["verdict"] = to_string(r.verdict);
    j["relation_dimension"] = r.relation_dimension;
    j["standard"] = r.standard;
    j["standard_basis"] = tensors_json(r.standard_basis);
    j["minors"] = minors;
    j["groebner"] = gb;
    j["locus_empty"] = r.locus_empty;
    return emit(g, "regular", r.verdict == Verdict::regular, j, text.str());
}

int nakayama_cmd(const Globals& g, const std::string& path) {
    const Tensor w = load_potential(g, path);
    const LinearMap nu = nakayama(derivation_quotient(w)).nu;
    const std::optional<Scalar> lambda = aut_scalar(w, nu);
    Json j;
    j["nu"] = matrix_json(nu);
    j["scalar"] = lambda ? Json(lambda->str()) : Json(nullptr);
    const std::string text =
        "nu = " + nu.str() + "\nscalar: " + (lambda ? lambda->str() : std::string("none (nu^(x)3 (w) is not proportional to w)")) +
        "\n";
    return emit(g, "nakayama", true, j, text);
}

struct VerifyArgs {
    std::string table;
    std::string type;
    std::size_t count = 3;
    bool markdown = false;
    bool timings = false;
};

int verify(const Globals& g, const VerifyArgs& v) {
    const FieldSpec f = g.field();
    TableChoice table = TableChoice::table1;
    if (v.table == "table2") table = TableChoice::table2;
    if (v.table == "table3") table = TableChoice::table3;
    std::vector<VerificationReport> reports;
    SweepOptions options{table, g.seed, v.count, f, std::nullopt};
    if (!v.type.empty()) options.only = parse_type(v.type);
    if (!g.binds.empty()) {
        if (!options.only) throw UsageError("--bind requires --type");
        const Bindings b =
            parse_bindings(g.binds, f.kind == FieldSpec::Kind::cyclotomic3 ? f : FieldSpec::rationals());
        switch (table) {
            case TableChoice::table1: reports.push_back(verify_row(*options.only, b, f)); break;
            case TableChoice::table2: reports.push_back(verify_table2(*options.only, b, f)); break;
            case TableChoice::table3: reports.push_back(verify_table3(*options.only, b, f)); break;
        }
        options.count = 1;
    } else {
        reports = sweep(options);
    }
    const Json j = sweep_json(options, reports, ReportOptions{v.timings});
    const bool passed = j["ok"].get<bool>();
    if (g.json) {
        std::cout << dump(j);
    } else if (v.markdown) {
        std::cout << sweep_markdown(reports);
    } else {
        std::size_t failures = 0;
        for (const VerificationReport& r : reports) {
            std::string bindings;
            for (const auto& [name, value] : r.bindings) bindings += (bindings.empty() ? "" : ", ") + name + "=" + value.str();
            std::cout << (r.passed() ? "pass " : "FAIL ") << display_name(r.type) << " (" << bindings << ")";
            for (const StageOutcome& s : r.stages)
                if (!s.passed) std::cout << "\n     " << s.name << ": " << s.detail;
            std::cout << "\n";
            failures += r.passed() ? 0 : 1;
        }
        std::cout << reports.size() - failures << "/" << reports.size() << " instances pass\n";
    }
    return passed ? Exit::ok : Exit::failed;
}

struct EcArgs {
    std::string lambda;
    std::uint64_t prime = 1000003;
    std::string p;
    std::string q;
    long n = 3;
    int i = 0;
    std::size_t samples = 50;
    bool cross_check = false;
};

HessePoint parse_point(const HesseCurve& e, const std::string& text) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ':') c = ',';
    std::vector<std::string> parts;
    std::stringstream ss(normalized);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("a point is three coordinates a:b:c, got '" + text + "'");
    return e.point(evaluate(parts[0], {}, e.field()), evaluate(parts[1], {}, e.field()),
                   evaluate(parts[2], {}, e.field()));
}

// The point from --p, or a sampled point outside E[3] when none is given.
HessePoint point_or_sample(const HesseCurve& e, const std::string& text, Rng& rng) {
    if (!text.empty()) return parse_point(e, text);
    for (int attempt = 0; attempt < 100; ++attempt) {
        HessePoint p = sample_point(e, rng);
        if (!is_n_torsion(e, p, 3)) return p;
    }
    throw SamplingExhausted("no point outside E[3] found");
}

int ec(const Globals& g, const std::string& op, const EcArgs& a) {
    const FieldSpec f = FieldSpec::prime(a.prime);
    const HesseCurve e(evaluate(a.lambda, {}, f), f);
    Rng rng(g.seed);
    Json j;
    j["lambda"] = e.lambda().str();
    j["prime"] = a.prime;
    auto finish = [&](bool passed, const std::string& text) {
        if (g.json)
            std::cout << dump(envelope("ec " + op, f, passed, j));
        else
            std::cout << text;
        return passed ? Exit::ok : Exit::failed;
    };

    if (op == "j") {
        j["j"] = e.j_invariant().str();
        return finish(true, "j = " + e.j_invariant().str() + "\n");
    }
    if (op == "add") {
        const HessePoint p = parse_point(e, a.p);
        const HessePoint q = a.q.empty() ? p : parse_point(e, a.q);
        const HessePoint s = add(e, p, q);
        j["p"] = p.str();
        j["q"] = q.str();
        j["sum"] = s.str();
        return finish(true, p.str() + " + " + q.str() + " = " + s.str() + "\n");
    }
    if (op == "torsion") {
        const HessePoint p = point_or_sample(e, a.p, rng);
        const HessePoint m = smul(e, a.n, p);
        const bool torsion = m == e.origin();
        j["p"] = p.str();
        j["n"] = a.n;
        j["multiple"] = m.str();
        j["torsion"] = torsion;
        return finish(torsion, "[" + std::to_string(a.n) + "]" + p.str() + " = " + m.str() + (torsion ? " (in E[" : " (not in E[") +
                                   std::to_string(a.n) + "])\n");
    }
    const HessePoint p = point_or_sample(e, a.p, rng);
    j["p"] = p.str();
    if (op == "sklyanin") {
        const QuadraticAlgebra s = sklyanin(e, p);
        const RegularityReport r = as_regular_check(s);
        j["relations"] = tensors_json(s.relations());
        j["verdict"] = to_string(r.verdict);
        std::string text = "p = " + p.str() + "\n";
        for (const Tensor& t : s.relations()) text += t.str() + "\n";
        return finish(r.verdict == Verdict::regular, text + to_string(r.verdict) + "\n");
    }
    if (op == "regular") {
        const bool criterion = ec_regular(e, p, a.i);
        j["i"] = a.i;
        j["criterion"] = criterion;
        std::string text = "p = " + p.str() + ", i = " + std::to_string(a.i) + ": " +
                           (criterion ? "regular (criterion (2) holds)" : "not regular (criterion (2) fails)") + "\n";
        bool agree = true;
        if (a.cross_check) {
            const Verdict v = as_regular_check(ec_algebra(e, p, a.i)).verdict;
            agree = (v == Verdict::regular) == criterion;
            j["algebra_verdict"] = to_string(v);
            j["agrees"] = agree;
            text += "algebra verdict: " + to_string(v) + (agree ? " (agrees)" : " (DISAGREES)") + "\n";
        }
        return finish(criterion && agree, text);
    }
    if (op == "g1") {
        const bool holds = g1_graph_check(ec_algebra(e, p, a.i), e, translation_by(p, a.i), a.samples, rng);
        j["i"] = a.i;
        j["samples"] = a.samples;
        j["graph_check"] = holds;
        return finish(holds, "p = " + p.str() + ", i = " + std::to_string(a.i) + ": relations " +
                                 (holds ? "vanish" : "do not vanish") + " on the graph of sigma over " +
                                 std::to_string(a.samples) + " samples\n");
    }
    throw UsageError("unknown ec operation " + op);
}

int error_exit(const Globals& g, const std::string& kind, const std::string& message, int code) {
    if (g.json) {
        Json r;
        r["error"] = kind;
        r["message"] = message;
        Json j;
        j["schema_version"] = report_schema_version;
        j["ok"] = false;
        j["result"] = std::move(r);
        std::cout << dump(j);
    }
    std::cerr << message << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for 3-dimensional quadratic AS-regular algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--field", g.field_text, "q, q-zeta3 or fp:<prime>")->capture_default_str();
    app.add_flag("--json", g.json, "emit a versioned JSON report");
    app.add_option("--seed", g.seed, "seed for sampled bindings and points")->capture_default_str();
    app.add_option("--bind", g.binds, "parameter bindings name=value ...; place FILE before them");

    std::string file;
    std::string theta;
    std::string command;
    for (auto [name, help] : {std::pair{"check-sp", "decide phi(w) = w"},
                              {"check-tsp", "search for a twisted-superpotential witness theta'"},
                              {"twist", "print the Mori-Smith twist w^theta"},
                              {"dqa", "print the relations of D(w)"},
                              {"regular", "standard-plus-minor-locus regularity verdict with trace"},
                              {"nakayama", "Nakayama matrix of D(w) and its scalar on w"}}) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("FILE", file, "potential in the text grammar, '-' for stdin")->required();
        if (std::string(name) == "twist") sub->add_option("--theta", theta, "nine comma-separated entries")->required();
        sub->callback([&command, name] { command = name; });
    }

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the catalog verification pipeline");
    verify_cmd->add_option("TABLE", verify_args.table)->required()->check(CLI::IsMember({"table1", "table2", "table3"}));
    verify_cmd->add_option("--type", verify_args.type, "row identifier, e.g. T1 or S1p");
    verify_cmd->add_option("--count", verify_args.count, "sampled bindings per row")->capture_default_str();
    verify_cmd->add_flag("--markdown", verify_args.markdown, "render the reports as Markdown");
    verify_cmd->add_flag("--timings", verify_args.timings, "include wall-clock times in JSON");
    verify_cmd->callback([&command] { command = "verify"; });

    EcArgs ec_args;
    std::string ec_op;
    CLI::App* ec_cmd = app.add_subcommand("ec", "Hesse elliptic curve operations");
    ec_cmd->require_subcommand(1);
    ec_cmd->add_option("--lambda", ec_args.lambda, "Hesse parameter")->required();
    ec_cmd->add_option("--prime", ec_args.prime, "field characteristic")->capture_default_str();
    for (auto [name, help] : {std::pair{"j", "j-invariant"},
                              {"add", "p + q in the group law"},
                              {"torsion", "test [n]p = o_E"},
                              {"sklyanin", "Sklyanin relations at p and their regularity verdict"},
                              {"regular", "criterion p - tau^i(p) in E[3]"},
                              {"g1", "graph check f(q, sigma(q)) = 0 on sampled q"}}) {
        CLI::App* sub = ec_cmd->add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("--p", ec_args.p, "point a:b:c; sampled when omitted");
        if (std::string(name) == "add") sub->add_option("--q", ec_args.q, "second point, defaults to p");
        if (std::string(name) == "torsion") sub->add_option("--n", ec_args.n)->capture_default_str();
        if (std::string(name) == "regular" || std::string(name) == "g1")
            sub->add_option("--i", ec_args.i, "power of tau")->check(CLI::Range(0, 1))->capture_default_str();
        if (std::string(name) == "regular")
            sub->add_flag("--cross-check", ec_args.cross_check, "also run the regularity engine on the algebra");
        if (std::string(name) == "g1") sub->add_option("--samples", ec_args.samples)->capture_default_str();
        sub->callback([&command, &ec_op, name] {
            command = "ec";
            ec_op = name;
        });
    }

    app.add_subcommand("render-tables", "print the encoded tables as Markdown")->callback([&command] {
        command = "render-tables";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        if (command == "check-sp") return check_sp(g, file);
        if (command == "check-tsp") return check_tsp(g, file);
        if (command == "twist") return twist(g, file, theta);
        if (command == "dqa") return dqa(g, file);
        if (command == "regular") return regular(g, file);
        if (command == "nakayama") return nakayama_cmd(g, file);
        if (command == "verify") return verify(g, verify_args);
        if (command == "ec") return ec(g, ec_op, ec_args);
        if (command == "render-tables") {
            std::cout << render_tables();
            return Exit::ok;
        }
    } catch (const UsageError& e) {
        return error_exit(g, "UsageError", e.what(), Exit::usage);
    } catch (const Error& e) {
        const std::string& kind = e.kind();
        if (kind == "SyntaxError" || kind == "MixedDegree" || kind == "UnboundParameter")
            return error_exit(g, kind, e.what(), Exit::parse_error);
        if (kind == "UnknownType" || kind == "InvalidField")
            return error_exit(g, kind, e.what(), Exit::usage);
        return error_exit(g, kind, e.what(), Exit::failed);
    }
    return Exit::usage;
}
