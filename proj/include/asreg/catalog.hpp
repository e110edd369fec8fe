#pragma once

#include "asreg/field.hpp"
#include "asreg/parse.hpp"
#include "asreg/random.hpp"
#include "asreg/tensor.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace asreg {

enum class TypeId { P1, P2, P3, S1, S2, S3, S1p, S2p, T1, T2, T3, Tp, CC, NC1, NC2, WL1, WL2, WL3, TL1, TL2, TL3, TL4 };

inline constexpr std::size_t type_count = 22;

// ASCII identifier used on the command line and in reports: "S1p", "Tp".
std::string id_of(TypeId t);
// Display name with primes: "S'1", "T'".
std::string display_name(TypeId t);
// Accepts either form. Throws UnknownType.
TypeId parse_type(const std::string& name);
std::vector<TypeId> all_types();

// One clause of a validity predicate, evaluated on a binding.
struct Condition {
    enum class Kind { nonzero, not_one, equals_one };
    Kind kind;
    std::string expression;
    std::string label;  // the predicate as printed, e.g. "a*b*c != 0,1"
    bool holds(const Bindings& b, const FieldSpec& f) const;
};

// How seeded bindings are drawn for a row.
enum class Sampling {
    free,   // independent small rationals
    cubes,  // parameters m*P^3, m*Q^3, ... so every cube root in the row is rational
};

struct Table3Link {
    std::string w0;
    std::array<std::string, 9> theta;  // row-major, row convention
    std::array<std::string, 9> g;      // (g (x) g) R(D(w0^theta)) = R(D(w))
};

struct CatalogRow {
    TypeId type;
    std::vector<std::string> parameters;
    std::vector<Condition> conditions;
    std::string potential;
    std::array<std::string, 3> relations;
    std::array<std::string, 9> nakayama;
    Table3Link table3;
    Sampling sampling = Sampling::free;
};

struct Table2Row {
    TypeId type;
    std::vector<std::string> parameters;
    std::vector<Condition> conditions;
    std::string w0;
    std::array<std::string, 3> relations;
};

const CatalogRow& table1_row(TypeId t);
// Throws NoTable2Row.
const Table2Row& table2_row(TypeId t);
std::vector<TypeId> table2_types();

struct Instance {
    TypeId type;
    Bindings bindings;
    FieldSpec field;
    Tensor potential;
    std::vector<Tensor> relations;
    LinearMap nakayama;
};

// Evaluates the Table 1 templates of the row. Templates are evaluated over the
// field of the binding values and then coerced into `field`.
// Throws ConditionViolated naming the failed predicate.
Instance instantiate(TypeId t, const Bindings& b, const FieldSpec& field = FieldSpec::rationals());

struct Table3Instance {
    Tensor w0;
    LinearMap theta;
    LinearMap g;
};

// The Table 3 data of a Table 1 row. Throws ConditionViolated, and
// CubeRootUnavailable when a cube root in the templates is not in the field.
Table3Instance instantiate_table3(TypeId t, const Bindings& b, const FieldSpec& field = FieldSpec::rationals());

struct Table2Instance {
    TypeId type;
    Bindings bindings;
    FieldSpec field;
    Tensor w0;
    std::vector<Tensor> relations;
};

Table2Instance instantiate_table2(TypeId t, const Bindings& b, const FieldSpec& field = FieldSpec::rationals());

struct StageOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
};

struct VerificationReport {
    std::string table;
    TypeId type;
    Bindings bindings;
    FieldSpec field;
    std::vector<StageOutcome> stages;
    double milliseconds = 0;
    bool passed() const;
    const StageOutcome* stage(const std::string& name) const;
};

// Table 1 pipeline; every stage runs even after an earlier failure.
VerificationReport verify_row(TypeId t, const Bindings& b, const FieldSpec& field = FieldSpec::rationals());
// Calabi-Yau checks of a Table 2 row.
VerificationReport verify_table2(TypeId t, const Bindings& b, const FieldSpec& field = FieldSpec::rationals());
// Table 3 identities: automorphism scalar, twist identity up to g, and the
// Zhang twist of D(w0) against D(w).
VerificationReport verify_table3(TypeId t, const Bindings& b, const FieldSpec& field = FieldSpec::rationals());

// Seeded bindings satisfying the row's conditions in `field`. Throws
// SamplingExhausted when none is found.
Bindings sample_binding(TypeId t, Rng& rng, const FieldSpec& field = FieldSpec::rationals());
Bindings sample_table2_binding(TypeId t, Rng& rng, const FieldSpec& field = FieldSpec::rationals());

// Primes below this are rejected by sweeps: a small field makes random
// bindings hit degenerate loci too often to count as evidence.
inline constexpr std::uint64_t sweep_prime_floor = 1000;

enum class TableChoice { table1, table2, table3 };

struct SweepOptions {
    TableChoice table = TableChoice::table1;
    std::uint64_t seed = 0;
    std::size_t count = 3;
    FieldSpec field = FieldSpec::rationals();
    std::optional<TypeId> only;
};

// Deterministic bindings per row, stream keyed by (seed, row); reports in
// row order. Throws InvalidField for prime fields below the floor.
std::vector<VerificationReport> sweep(const SweepOptions& options);

// The encoded tables re-emitted as Markdown for comparison with the source.
std::string render_tables();

}  // namespace asreg
