#pragma once

#include "asreg/catalog.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace asreg {

// Bumped whenever a key is renamed, removed or changes meaning.
inline constexpr int report_schema_version = 1;

using Json = nlohmann::ordered_json;

struct ReportOptions {
    bool timings = false;  // wall-clock fields break byte stability, so they are opt-in
};

Json to_json(const VerificationReport& report, const ReportOptions& options = {});

// Wraps a command result as {"schema_version", "command", "field", "ok", "result"}.
Json envelope(const std::string& command, const FieldSpec& field, bool ok, Json result);

Json sweep_json(const SweepOptions& sweep, const std::vector<VerificationReport>& reports,
                const ReportOptions& options = {});

// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

std::string to_markdown(const VerificationReport& report);
std::string sweep_markdown(const std::vector<VerificationReport>& reports);

std::string table_name(TableChoice t);

}  // namespace asreg
