#pragma once

#include "catcenter/specfile.hpp"

namespace catcenter {

struct RunResult {
    Report report{""};
    std::string human;     // summaries and listings
    std::string artifact;  // emitted spec text, when a command produces one
    bool ok() const { return report.ok(); }
};

/// Dispatch one command against a workspace. Throws std::invalid_argument on
/// unknown commands or unresolved names.
RunResult run_command(const std::vector<std::string>& args, Workspace& ws);

/// Structured report with a stable schema; deterministic for identical
/// inputs except for the timing_ms field.
std::string report_json(const Report& r, const std::string& command, double timing_ms);

}  // namespace catcenter
