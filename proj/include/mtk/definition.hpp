#pragma once

#include "mtk/measure.hpp"
#include "mtk/report.hpp"
#include "mtk/set_system.hpp"

#include <json.hpp>

#include <string>

namespace mtk {

/// Parsed space-definition file. A definition either has a finite named
/// carrier with an explicit system and measure, or declares the interval
/// space [0,1) (implicit semiring of subintervals with length measure).
/// Maps and sequences stay as validated JSON and are materialized per
/// omega-group on demand.
struct Definition {
    bool interval = false;

    Carrier carrier;             // finite only
    std::vector<Subset> system;  // finite only
    std::map<Mask, Rat> measure; // finite only

    std::string omega_group = "ratscalar";
    nlohmann::json maps = nlohmann::json::object();
    nlohmann::json sequences = nlohmann::json::object();

    SetSystem set_system() const; // finite only
    MeasureTable measure_table() const;
};

/// Strict parse: unknown fields, non-string rationals and malformed shapes
/// are rejected with a location in the message.
Definition parse_definition(const std::string& text);
Definition load_definition(const std::string& path);

/// Canonical serialization; parse(serialize(d)) == d on canonical forms.
std::string serialize_definition(const Definition& def);

/// Stable digest of the canonical serialization, quoted in reports.
std::string definition_digest(const Definition& def);

/// Rendering of reports: deterministic text and JSON forms. Exit code 0 for
/// pass, 1 for fail, 3 for flagged-but-passing.
struct RenderedReport {
    std::string command;
    std::string digest;
    std::vector<CheckRecord> records;
    std::vector<std::pair<std::string, std::string>> outputs; // named result values

    bool pass() const;
    bool flagged() const;
    int exit_code() const;
    std::string verdict() const; // "pass" | "fail" | "flagged"
};

std::string render_text(const RenderedReport& report, bool timestamps);
std::string render_json(const RenderedReport& report, bool timestamps);

} // namespace mtk
