#include "cft_cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace cft::cli {

namespace {

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

}  // namespace

bool RunReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool RunReport::operator==(const RunReport& other) const {
    return command == other.command && inputs == other.inputs && result == other.result && checks == other.checks &&
           elapsed_ms == other.elapsed_ms;
}

Json to_json(const RunReport& report) {
    Json j;
    j["command"] = report.command;
    j["inputs"] = report.inputs;
    j["result"] = report.result;
    Json checks = Json::array();
    for (const Check& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

RunReport report_from_json(const Json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.result = j.at("result");
    for (const auto& c : j.at("checks")) {
        r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>()});
    }
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

std::string to_tsv(const RunReport& report) {
    std::ostringstream out;
    auto row = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
        out << '\n';
    };
    if (report.table) {
        for (const auto& r : *report.table) row(r);
        return out.str();
    }
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(report.result, "", cells);
    row({"key", "value"});
    for (const auto& [k, v] : cells) row({k, v});
    for (const Check& c : report.checks) row({"check." + c.name, c.pass ? "pass" : "fail"});
    return out.str();
}

}  // namespace cft::cli
