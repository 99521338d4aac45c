#pragma once

#include <string>

#include <json.hpp>

#include "codes.hpp"
#include "vanishing.hpp"

namespace toric {

// Runs one job document (already parsed); throws Error subclasses on
// schema violations, budget exhaustion, or domain failures.
nlohmann::json run_job_json(const nlohmann::json& job);

// Reads, parses, and runs a job file.
nlohmann::json run_job_file(const std::string& path);

// Runs every *.json job under dir and compares against its "expect"
// block; the report lists per-file mismatches.
nlohmann::json verify_suite_dir(const std::string& dir);

}  // namespace toric
