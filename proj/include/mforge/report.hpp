#pragma once

// Machine-readable verification reports.  Status meanings:
//   Proved       symbolic proof succeeded (and the realized check, if run)
//   RealizedOnly symbolic proof failed but the exact matrix check passed
//   Failed       a realized check refuted the statement
//   NotProved    symbolic proof failed and no realized check was run
// Failed is only possible when a realized comparison disagrees.

#include "mforge/version.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mforge::verify {

enum class Status { Proved, RealizedOnly, Failed, NotProved };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Proved: return "Proved";
        case Status::RealizedOnly: return "RealizedOnly";
        case Status::Failed: return "Failed";
        case Status::NotProved: return "NotProved";
    }
    return "?";
}

struct ReportEntry {
    std::string id;
    std::string paper_ref;
    Status status = Status::NotProved;
    std::string lhs_normal;
    std::string rhs_normal;
    long long elapsed_ms = 0;
};

struct VerificationReport {
    int g = 0;
    std::string engine_version = kEngineVersion;
    std::vector<ReportEntry> statements;

    int count(Status s) const {
        int n = 0;
        for (const auto& e : statements)
            if (e.status == s) ++n;
        return n;
    }
    int proved() const { return count(Status::Proved); }
    int failed() const { return count(Status::Failed); }
    int not_proved() const { return count(Status::NotProved); }
    int realized_only() const { return count(Status::RealizedOnly); }
    bool all_proved() const { return proved() == static_cast<int>(statements.size()); }
};

/// Stable JSON rendering; timing fields can be suppressed for byte-identical
/// comparison across runs.
inline nlohmann::ordered_json report_to_json(const VerificationReport& r,
                                             bool include_timing = true) {
    nlohmann::ordered_json j;
    j["g"] = r.g;
    j["engine_version"] = r.engine_version;
    j["statements"] = nlohmann::ordered_json::array();
    for (const auto& e : r.statements) {
        nlohmann::ordered_json s;
        s["id"] = e.id;
        s["paper_ref"] = e.paper_ref;
        s["status"] = to_string(e.status);
        s["lhs_normal"] = e.lhs_normal;
        s["rhs_normal"] = e.rhs_normal;
        if (include_timing) s["elapsed_ms"] = e.elapsed_ms;
        j["statements"].push_back(std::move(s));
    }
    j["summary"] = {{"proved", r.proved()},
                    {"failed", r.failed()},
                    {"not_proved", r.not_proved()},
                    {"realized_only", r.realized_only()}};
    return j;
}

/// Structural validation of the report schema; returns a list of problems
/// (empty when valid).
inline std::vector<std::string> validate_report_json(const nlohmann::json& j) {
    std::vector<std::string> problems;
    auto need = [&](const char* key, bool ok) {
        if (!ok) problems.push_back(std::string("missing or mistyped field: ") + key);
    };
    need("g", j.contains("g") && j["g"].is_number_integer());
    need("engine_version", j.contains("engine_version") && j["engine_version"].is_string());
    need("statements", j.contains("statements") && j["statements"].is_array());
    if (j.contains("statements") && j["statements"].is_array()) {
        for (const auto& s : j["statements"]) {
            need("statements.id", s.contains("id") && s["id"].is_string());
            need("statements.paper_ref", s.contains("paper_ref") && s["paper_ref"].is_string());
            need("statements.status", s.contains("status") && s["status"].is_string());
            need("statements.lhs_normal", s.contains("lhs_normal") && s["lhs_normal"].is_string());
            need("statements.rhs_normal", s.contains("rhs_normal") && s["rhs_normal"].is_string());
            if (s.contains("elapsed_ms") && !s["elapsed_ms"].is_number())
                problems.push_back("statements.elapsed_ms mistyped");
            if (!problems.empty()) break;
        }
    }
    need("summary", j.contains("summary") && j["summary"].is_object());
    if (j.contains("summary") && j["summary"].is_object()) {
        const auto& s = j["summary"];
        need("summary.proved", s.contains("proved") && s["proved"].is_number_integer());
        need("summary.failed", s.contains("failed") && s["failed"].is_number_integer());
        need("summary.not_proved",
             s.contains("not_proved") && s["not_proved"].is_number_integer());
    }
    return problems;
}

}  // namespace mforge::verify
