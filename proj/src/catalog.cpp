#include "asreg/catalog.hpp"

#include "asreg/errors.hpp"
#include "asreg/quadratic.hpp"
#include "asreg/regularity.hpp"

#include <chrono>
#include <future>
#include <sstream>

namespace asreg {

namespace {

struct TypeNames {
    TypeId type;
    const char* id;
    const char* display;
};

constexpr TypeNames names[type_count] = {
    {TypeId::P1, "P1", "P1"},     {TypeId::P2, "P2", "P2"},     {TypeId::P3, "P3", "P3"},
    {TypeId::S1, "S1", "S1"},     {TypeId::S2, "S2", "S2"},     {TypeId::S3, "S3", "S3"},
    {TypeId::S1p, "S1p", "S'1"},  {TypeId::S2p, "S2p", "S'2"},  {TypeId::T1, "T1", "T1"},
    {TypeId::T2, "T2", "T2"},     {TypeId::T3, "T3", "T3"},     {TypeId::Tp, "Tp", "T'"},
    {TypeId::CC, "CC", "CC"},     {TypeId::NC1, "NC1", "NC1"},  {TypeId::NC2, "NC2", "NC2"},
    {TypeId::WL1, "WL1", "WL1"},  {TypeId::WL2, "WL2", "WL2"},  {TypeId::WL3, "WL3", "WL3"},
    {TypeId::TL1, "TL1", "TL1"},  {TypeId::TL2, "TL2", "TL2"},  {TypeId::TL3, "TL3", "TL3"},
    {TypeId::TL4, "TL4", "TL4"},
};

const Bindings& check_bound(const Bindings& b, const std::vector<std::string>& params, TypeId t) {
    for (const std::string& p : params)
        if (!b.count(p)) throw UnboundParameter("'" + p + "' is required by " + display_name(t));
    for (const auto& [name, value] : b) {
        bool known = false;
        for (const std::string& p : params) known = known || p == name;
        if (!known) throw UnboundParameter("'" + name + "' is not a parameter of " + display_name(t));
    }
    return b;
}

FieldSpec field_of(const Bindings& b) {
    FieldSpec f = FieldSpec::rationals();
    for (const auto& [name, value] : b) f = join(f, value.field());
    return f;
}

Bindings coerce(const Bindings& b, const FieldSpec& f) {
    Bindings out;
    for (const auto& [name, value] : b) out[name] = value.in(f);
    return out;
}

Tensor coerce(const Tensor& t, const FieldSpec& f) {
    Tensor out(t.degree());
    for (const auto& [code, c] : t.terms()) out.add_code(code, c.in(f));
    return out;
}

void check_conditions(const std::vector<Condition>& conds, const Bindings& b, const FieldSpec& f, TypeId t) {
    for (const Condition& c : conds)
        if (!c.holds(b, f)) {
            std::string where = f.kind == FieldSpec::Kind::primefield ? " over " + f.name() : "";
            throw ConditionViolated(display_name(t) + ": " + c.label + where);
        }
}

// Conditions hold both where the binding lives and in the target field.
FieldSpec validate(const std::vector<Condition>& conds, const Bindings& b, const FieldSpec& target, TypeId t) {
    const FieldSpec natural = field_of(b);
    check_conditions(conds, b, natural, t);
    if (target != natural) check_conditions(conds, coerce(b, target), target, t);
    return natural;
}

LinearMap matrix_of(const std::array<std::string, 9>& entries, const Bindings& b, const FieldSpec& natural,
                    const FieldSpec& target) {
    Matrix m(3, 3);
    for (std::size_t k = 0; k < 9; ++k) m.at(k / 3, k % 3) = evaluate(entries[k], b, natural).in(target);
    return m;
}

std::vector<std::string> strs(const std::vector<Tensor>& ts) {
    std::vector<std::string> out;
    for (const Tensor& t : ts) out.push_back(t.str());
    return out;
}

nlohmann::ordered_json matrix_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

std::vector<Tensor> partials(const Tensor& w) {
    return {partial(w, Var::x), partial(w, Var::y), partial(w, Var::z)};
}

template <class Body>
void run_stage(VerificationReport& report, const std::string& name, Body body) {
    StageOutcome s;
    s.name = name;
    try {
        body(s);
    } catch (const Error& e) {
        s.passed = false;
        s.detail = e.what();
    }
    report.stages.push_back(std::move(s));
}

// Span equality; on failure names the first relation outside the other span.
void compare_spans(StageOutcome& s, const std::vector<Tensor>& computed, const std::vector<Tensor>& expected) {
    s.data["computed"] = strs(computed);
    s.data["expected"] = strs(expected);
    const RelationSpace have(computed), want(expected);
    s.passed = have == want;
    if (s.passed) {
        s.detail = "partial derivatives span the listed relations";
        return;
    }
    for (const Tensor& e : expected)
        if (!have.contains(e)) {
            s.detail = "listed relation " + e.str() + " is not in the span of the partials";
            return;
        }
    for (const Tensor& c : computed)
        if (!want.contains(c)) {
            s.detail = "partial " + c.str() + " is not in the span of the listed relations";
            return;
        }
    s.detail = "spans differ in dimension";
}

void stage_witness(StageOutcome& s, const Tensor& w) {
    const WitnessResult r = twisted_witness(w);
    s.data["solution_dimension"] = r.solution_dimension;
    switch (r.status) {
        case WitnessResult::Status::found:
            s.passed = is_witness(w, *r.theta) && r.theta->invertible();
            s.data["theta_prime"] = matrix_json(*r.theta);
            s.detail = s.passed ? "invertible witness found" : "returned witness failed substitution";
            break;
        case WitnessResult::Status::none:
            s.detail = "(theta' (x) id (x) id)(phi(w)) = w has no solution";
            break;
        case WitnessResult::Status::undetermined_invertibility:
            s.detail = "solutions exist but no invertible one was found among the searched candidates";
            break;
    }
}

void stage_hilbert(StageOutcome& s, const Tensor& w) {
    const std::vector<std::size_t> dims = hilbert_dims(derivation_quotient(w), 4);
    s.data["dims"] = dims;
    const std::vector<std::size_t> expected{1, 3, 6, 10, 15};
    s.passed = dims == expected;
    if (s.passed) {
        s.detail = "(1,3,6,10,15)";
        return;
    }
    for (std::size_t n = 0; n < dims.size(); ++n)
        if (dims[n] != expected[n]) {
            s.detail = "dim A_" + std::to_string(n) + " = " + std::to_string(dims[n]) + ", expected " +
                       std::to_string(expected[n]);
            return;
        }
}

void stage_regularity(StageOutcome& s, const QuadraticAlgebra& a) {
    const RegularityReport r = as_regular_check(a);
    s.passed = r.verdict == Verdict::regular;
    s.detail = to_string(r.verdict);
    s.data["verdict"] = to_string(r.verdict);
    std::vector<std::string> gb;
    for (const CommPoly& p : r.groebner.generators) gb.push_back(p.str());
    s.data["groebner"] = gb;
}

// Finds c with computed = c * expected; on failure names the first entry
// that breaks proportionality.
void compare_up_to_scalar(StageOutcome& s, const Matrix& computed, const Matrix& expected) {
    s.data["computed"] = matrix_json(computed);
    s.data["expected"] = matrix_json(expected);
    Scalar c;
    if (proportional(computed, expected, c)) {
        s.passed = true;
        s.data["scalar"] = c.str();
        s.detail = "matches up to scalar " + c.str();
        return;
    }
    std::optional<Scalar> ratio;
    for (std::size_t k = 0; k < 9; ++k) {
        const Scalar& got = computed.at(k / 3, k % 3);
        const Scalar& want = expected.at(k / 3, k % 3);
        if (!ratio && !want.is_zero()) ratio = got / want;
        const Scalar scaled = ratio ? want * *ratio : want;
        if (got != scaled) {
            s.detail = "entry (" + std::to_string(k / 3 + 1) + "," + std::to_string(k % 3 + 1) + ") is " + got.str() +
                       ", expected " + scaled.str();
            return;
        }
    }
    s.detail = "not proportional";
}

void stage_table3(StageOutcome& s, const Instance& row, const Table3Instance& in) {
    s.data["w0"] = in.w0.str();
    s.data["theta"] = matrix_json(in.theta);
    s.data["g"] = matrix_json(in.g);
    const std::optional<Scalar> lambda = aut_scalar(in.w0, in.theta);
    s.data["lambda"] = lambda ? lambda->str() : "none";
    const Tensor twisted = ms_twist(in.w0, in.theta);
    const bool same = relations_equal_up_to(derivation_quotient(twisted), derivation_quotient(row.potential), in.g);
    const std::optional<Scalar> c = proportional(gl_apply(twisted, in.g), row.potential);
    s.data["c"] = c ? c->str() : "none";
    s.passed = lambda.has_value() && same;
    if (!lambda) {
        s.detail = "theta is not in Aut(w0)";
    } else if (!same) {
        s.detail = "(g (x) g) R(D(w0^theta)) differs from R(D(w))";
    } else {
        s.detail = "theta in Aut(w0) with scalar " + lambda->str() + "; D(w0^theta) matches D(w) under g";
    }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

Scalar small_rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound) {
    const std::int64_t num = rng.between(-num_bound, num_bound);
    const std::int64_t den = rng.between(1, den_bound);
    return Scalar::rational(num, den);
}

Scalar small_nonzero_rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound) {
    for (;;) {
        Scalar s = small_rational(rng, num_bound, den_bound);
        if (!s.is_zero()) return s;
    }
}

bool satisfies(const std::vector<Condition>& conds, const Bindings& b, const FieldSpec& target) {
    try {
        const FieldSpec natural = field_of(b);
        for (const Condition& c : conds)
            if (!c.holds(b, natural)) return false;
        if (target != natural) {
            const Bindings moved = coerce(b, target);
            for (const Condition& c : conds)
                if (!c.holds(moved, target)) return false;
        }
        return true;
    } catch (const DivisionByZero&) {
        return false;
    }
}

constexpr int max_sampling_attempts = 10000;

}  // namespace

std::string id_of(TypeId t) { return names[static_cast<std::size_t>(t)].id; }
std::string display_name(TypeId t) { return names[static_cast<std::size_t>(t)].display; }

TypeId parse_type(const std::string& name) {
    for (const TypeNames& n : names)
        if (name == n.id || name == n.display) return n.type;
    throw UnknownType("unknown type '" + name + "'");
}

std::vector<TypeId> all_types() {
    std::vector<TypeId> out;
    for (const TypeNames& n : names) out.push_back(n.type);
    return out;
}

bool Condition::holds(const Bindings& b, const FieldSpec& f) const {
    const Scalar v = evaluate(expression, b, f);
    switch (kind) {
        case Kind::nonzero: return !v.is_zero();
        case Kind::not_one: return !v.is_one();
        case Kind::equals_one: return v.is_one();
    }
    return false;
}

Instance instantiate(TypeId t, const Bindings& b, const FieldSpec& field) {
    const CatalogRow& row = table1_row(t);
    check_bound(b, row.parameters, t);
    const FieldSpec natural = validate(row.conditions, b, field, t);
    Instance in{t, b, field, coerce(parse_potential(row.potential, b, natural), field), {}, {}};
    for (const std::string& r : row.relations) in.relations.push_back(coerce(parse_potential(r, b, natural), field));
    in.nakayama = matrix_of(row.nakayama, b, natural, field);
    return in;
}

Table3Instance instantiate_table3(TypeId t, const Bindings& b, const FieldSpec& field) {
    const CatalogRow& row = table1_row(t);
    check_bound(b, row.parameters, t);
    const FieldSpec natural = validate(row.conditions, b, field, t);
    return {coerce(parse_potential(row.table3.w0, b, natural), field),
            matrix_of(row.table3.theta, b, natural, field), matrix_of(row.table3.g, b, natural, field)};
}

Table2Instance instantiate_table2(TypeId t, const Bindings& b, const FieldSpec& field) {
    const Table2Row& row = table2_row(t);
    check_bound(b, row.parameters, t);
    const FieldSpec natural = validate(row.conditions, b, field, t);
    Table2Instance in{t, b, field, coerce(parse_potential(row.w0, b, natural), field), {}};
    for (const std::string& r : row.relations) in.relations.push_back(coerce(parse_potential(r, b, natural), field));
    return in;
}

bool VerificationReport::passed() const {
    for (const StageOutcome& s : stages)
        if (!s.passed) return false;
    return true;
}

const StageOutcome* VerificationReport::stage(const std::string& name) const {
    for (const StageOutcome& s : stages)
        if (s.name == name) return &s;
    return nullptr;
}

VerificationReport verify_row(TypeId t, const Bindings& b, const FieldSpec& field) {
    const auto start = std::chrono::steady_clock::now();
    const Instance in = instantiate(t, b, field);
    VerificationReport report{"table1", t, b, field, {}, 0};
    run_stage(report, "derivatives", [&](StageOutcome& s) { compare_spans(s, partials(in.potential), in.relations); });
    run_stage(report, "witness", [&](StageOutcome& s) { stage_witness(s, in.potential); });
    run_stage(report, "nakayama", [&](StageOutcome& s) {
        compare_up_to_scalar(s, nakayama(derivation_quotient(in.potential)).nu, in.nakayama);
    });
    run_stage(report, "regularity", [&](StageOutcome& s) { stage_regularity(s, derivation_quotient(in.potential)); });
    run_stage(report, "table3", [&](StageOutcome& s) { stage_table3(s, in, instantiate_table3(t, b, field)); });
    run_stage(report, "hilbert", [&](StageOutcome& s) { stage_hilbert(s, in.potential); });
    report.milliseconds = elapsed_ms(start);
    return report;
}

VerificationReport verify_table2(TypeId t, const Bindings& b, const FieldSpec& field) {
    const auto start = std::chrono::steady_clock::now();
    const Table2Instance in = instantiate_table2(t, b, field);
    VerificationReport report{"table2", t, b, field, {}, 0};
    run_stage(report, "derivatives", [&](StageOutcome& s) { compare_spans(s, partials(in.w0), in.relations); });
    run_stage(report, "superpotential", [&](StageOutcome& s) {
        s.data["w0"] = in.w0.str();
        s.passed = is_superpotential(in.w0);
        s.detail = s.passed ? "phi(w0) = w0" : "phi(w0) = " + cyclic(in.w0).str();
    });
    run_stage(report, "nakayama", [&](StageOutcome& s) {
        const LinearMap nu = nakayama(derivation_quotient(in.w0)).nu;
        s.data["computed"] = matrix_json(nu);
        s.passed = nu == Matrix::identity(3).in(field);
        if (s.passed) {
            s.detail = "identity";
            return;
        }
        s.detail = "not the identity";
        for (std::size_t k = 0; k < 9; ++k) {
            const Scalar want = (k / 3 == k % 3) ? Scalar(1) : Scalar(0);
            if (nu.at(k / 3, k % 3) != want) {
                s.detail = "entry (" + std::to_string(k / 3 + 1) + "," + std::to_string(k % 3 + 1) + ") is " +
                           nu.at(k / 3, k % 3).str();
                break;
            }
        }
    });
    run_stage(report, "regularity", [&](StageOutcome& s) { stage_regularity(s, derivation_quotient(in.w0)); });
    report.milliseconds = elapsed_ms(start);
    return report;
}

VerificationReport verify_table3(TypeId t, const Bindings& b, const FieldSpec& field) {
    const auto start = std::chrono::steady_clock::now();
    const Instance in = instantiate(t, b, field);
    VerificationReport report{"table3", t, b, field, {}, 0};
    run_stage(report, "table3", [&](StageOutcome& s) { stage_table3(s, in, instantiate_table3(t, b, field)); });
    run_stage(report, "zhang", [&](StageOutcome& s) {
        const Table3Instance t3 = instantiate_table3(t, b, field);
        const QuadraticAlgebra twisted = zhang_twist(derivation_quotient(t3.w0), t3.theta);
        s.data["relations"] = strs(twisted.space().basis());
        s.passed = relations_equal_up_to(twisted, derivation_quotient(in.potential), t3.g);
        s.detail = s.passed ? "(g (x) g) R(D(w0)^theta) = R(D(w))" : "(g (x) g) R(D(w0)^theta) differs from R(D(w))";
    });
    report.milliseconds = elapsed_ms(start);
    return report;
}

Bindings sample_binding(TypeId t, Rng& rng, const FieldSpec& field) {
    const CatalogRow& row = table1_row(t);
    for (int attempt = 0; attempt < max_sampling_attempts; ++attempt) {
        Bindings b;
        if (row.sampling == Sampling::cubes) {
            const Scalar m = small_nonzero_rational(rng, 3, 2);
            for (const std::string& p : row.parameters) b[p] = m * Scalar(rng.between(1, 3) * (rng.below(2) ? 1 : -1)).pow(3);
        } else {
            for (const std::string& p : row.parameters) b[p] = small_rational(rng, 6, 3);
        }
        if (satisfies(row.conditions, b, field)) return b;
    }
    throw SamplingExhausted("no valid binding found for " + display_name(t));
}

Bindings sample_table2_binding(TypeId t, Rng& rng, const FieldSpec& field) {
    const Table2Row& row = table2_row(t);
    for (int attempt = 0; attempt < max_sampling_attempts; ++attempt) {
        Bindings b;
        for (const std::string& p : row.parameters) {
            const bool root_of_unity = !row.conditions.empty() && row.conditions.front().kind == Condition::Kind::equals_one;
            if (root_of_unity) {
                b[p] = field.kind == FieldSpec::Kind::cyclotomic3 ? Scalar::zeta3().pow(static_cast<long>(rng.below(3)))
                                                                  : Scalar(1);
            } else {
                b[p] = small_rational(rng, 6, 3);
            }
        }
        if (satisfies(row.conditions, b, field)) return b;
    }
    throw SamplingExhausted("no valid binding found for " + display_name(t));
}

std::vector<VerificationReport> sweep(const SweepOptions& options) {
    if (options.field.kind == FieldSpec::Kind::primefield && options.field.modulus < sweep_prime_floor) {
        throw InvalidField("p = " + std::to_string(options.field.modulus) + " is below the sweep safety bound " +
                           std::to_string(sweep_prime_floor));
    }
    std::vector<TypeId> types = options.table == TableChoice::table2 ? table2_types() : all_types();
    if (options.only) {
        if (options.table == TableChoice::table2) table2_row(*options.only);
        types = {*options.only};
    }
    auto run_row = [&options](TypeId t) {
        std::vector<VerificationReport> out;
        Rng rng(options.seed, static_cast<std::uint64_t>(t));
        for (std::size_t k = 0; k < options.count; ++k) {
            switch (options.table) {
                case TableChoice::table1:
                    out.push_back(verify_row(t, sample_binding(t, rng, options.field), options.field));
                    break;
                case TableChoice::table2:
                    out.push_back(verify_table2(t, sample_table2_binding(t, rng, options.field), options.field));
                    break;
                case TableChoice::table3:
                    out.push_back(verify_table3(t, sample_binding(t, rng, options.field), options.field));
                    break;
            }
        }
        return out;
    };
    std::vector<std::future<std::vector<VerificationReport>>> pending;
    for (TypeId t : types) pending.push_back(std::async(std::launch::async, run_row, t));
    std::vector<VerificationReport> all;
    for (auto& f : pending)
        for (VerificationReport& r : f.get()) all.push_back(std::move(r));
    return all;
}

std::string render_tables() {
    std::ostringstream out;
    auto joined = [](const auto& items, const std::string& sep) {
        std::string s;
        for (const auto& item : items) s += (s.empty() ? "" : sep) + std::string(item);
        return s;
    };
    auto conditions = [&](const std::vector<Condition>& conds) {
        std::vector<std::string> labels;
        for (const Condition& c : conds)
            if (labels.empty() || labels.back() != c.label) labels.push_back(c.label);
        return labels.empty() ? std::string("none") : joined(labels, "; ");
    };
    auto matrix = [&](const std::array<std::string, 9>& m) {
        return "[" + m[0] + ", " + m[1] + ", " + m[2] + "; " + m[3] + ", " + m[4] + ", " + m[5] + "; " + m[6] + ", " +
               m[7] + ", " + m[8] + "]";
    };
    out << "## Table 1\n\n| Type | Potential w | Condition | Derivatives | Nakayama |\n|---|---|---|---|---|\n";
    for (TypeId t : all_types()) {
        const CatalogRow& r = table1_row(t);
        out << "| " << display_name(t) << " | " << r.potential << " | " << conditions(r.conditions) << " | "
            << joined(r.relations, "; ") << " | " << matrix(r.nakayama) << " |\n";
    }
    out << "\n## Table 2\n\n| Type | Superpotential w0 | Condition | Derivatives |\n|---|---|---|---|\n";
    for (TypeId t : table2_types()) {
        const Table2Row& r = table2_row(t);
        out << "| " << display_name(t) << " | " << r.w0 << " | " << conditions(r.conditions) << " | "
            << joined(r.relations, "; ") << " |\n";
    }
    out << "\n## Table 3\n\n| Type | w0 | theta | g |\n|---|---|---|---|\n";
    for (TypeId t : all_types()) {
        const Table3Link& r = table1_row(t).table3;
        out << "| " << display_name(t) << " | " << r.w0 << " | " << matrix(r.theta) << " | " << matrix(r.g) << " |\n";
    }
    return out.str();
}

}  // namespace asreg
