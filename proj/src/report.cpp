#include "asreg/report.hpp"

#include <sstream>

namespace asreg {

namespace {

Json bindings_json(const Bindings& b) {
    Json out = Json::object();
    for (const auto& [name, value] : b) out[name] = value.str();
    return out;
}

std::string bindings_text(const Bindings& b) {
    std::string s;
    for (const auto& [name, value] : b) s += (s.empty() ? "" : ", ") + name + " = " + value.str();
    return s.empty() ? "none" : s;
}

}  // namespace

std::string table_name(TableChoice t) {
    switch (t) {
        case TableChoice::table1: return "table1";
        case TableChoice::table2: return "table2";
        case TableChoice::table3: return "table3";
    }
    return "table1";
}

Json to_json(const VerificationReport& report, const ReportOptions& options) {
    Json j;
    j["table"] = report.table;
    j["type"] = id_of(report.type);
    j["display_name"] = display_name(report.type);
    j["field"] = report.field.name();
    j["bindings"] = bindings_json(report.bindings);
    j["passed"] = report.passed();
    Json stages = Json::array();
    for (const StageOutcome& s : report.stages) {
        Json stage;
        stage["name"] = s.name;
        stage["passed"] = s.passed;
        stage["detail"] = s.detail;
        stage["data"] = s.data;
        stages.push_back(std::move(stage));
    }
    j["stages"] = std::move(stages);
    if (options.timings) j["milliseconds"] = report.milliseconds;
    return j;
}

Json envelope(const std::string& command, const FieldSpec& field, bool ok, Json result) {
    Json j;
    j["schema_version"] = report_schema_version;
    j["command"] = command;
    j["field"] = field.name();
    j["ok"] = ok;
    j["result"] = std::move(result);
    return j;
}

Json sweep_json(const SweepOptions& sweep, const std::vector<VerificationReport>& reports,
                const ReportOptions& options) {
    Json result;
    result["table"] = table_name(sweep.table);
    result["seed"] = sweep.seed;
    result["count"] = sweep.count;
    std::size_t failed = 0;
    Json rows = Json::array();
    for (const VerificationReport& r : reports) {
        if (!r.passed()) ++failed;
        rows.push_back(to_json(r, options));
    }
    result["instances"] = reports.size();
    result["failed"] = failed;
    result["reports"] = std::move(rows);
    return envelope("verify", sweep.field, failed == 0, std::move(result));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string to_markdown(const VerificationReport& report) {
    std::ostringstream out;
    out << "### " << report.table << " " << display_name(report.type) << " (" << bindings_text(report.bindings)
        << ") over " << report.field.name() << ": " << (report.passed() ? "pass" : "FAIL") << "\n\n";
    out << "| Stage | Result | Detail |\n|---|---|---|\n";
    for (const StageOutcome& s : report.stages)
        out << "| " << s.name << " | " << (s.passed ? "pass" : "FAIL") << " | " << s.detail << " |\n";
    return out.str();
}

std::string sweep_markdown(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const VerificationReport& r : reports) failed += r.passed() ? 0 : 1;
    out << "## Verification: " << reports.size() - failed << "/" << reports.size() << " instances pass\n\n";
    for (const VerificationReport& r : reports) out << to_markdown(r) << "\n";
    return out.str();
}

}  // namespace asreg
