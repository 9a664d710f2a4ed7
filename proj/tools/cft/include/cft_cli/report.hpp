#pragma once

// RunReport: the machine-readable envelope every subcommand emits.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cft::cli {

using Json = nlohmann::ordered_json;

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    bool operator==(const Check&) const = default;
};

/// Rows for --format tsv; the first row is the header.
using Table = std::vector<std::vector<std::string>>;

struct RunReport {
    std::string command;
    Json inputs = Json::object();
    Json result = Json::object();
    std::vector<Check> checks;
    double elapsed_ms = 0;
    /// Tabular view of `result`; not part of the JSON schema.
    std::optional<Table> table;

    bool all_pass() const;
    bool operator==(const RunReport& other) const;
};

Json to_json(const RunReport& report);
/// Inverse of to_json; throws nlohmann::json::exception on schema mismatch.
RunReport report_from_json(const Json& j);

/// Tab-separated rendering: the table if present, else flattened key/value
/// rows of `result` followed by the checks.
std::string to_tsv(const RunReport& report);

}  // namespace cft::cli
