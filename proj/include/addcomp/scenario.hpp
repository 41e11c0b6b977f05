#pragma once

#include <addcomp/json_io.hpp>
#include <addcomp/moderation.hpp>
#include <addcomp/sumset.hpp>

#include <optional>
#include <string>

namespace addcomp {

inline constexpr const char* kScenarioSchema = "addcomp/1";

// Process exit codes shared by the CLI and the scenario runner.
enum ExitCode : int { kExitOk = 0, kExitFailed = 2, kExitUnverified = 3, kExitSchema = 64 };

// {"catalog": id} | {"analytic": {"u", "v"}} | {"ball": u} | {"poly": u}
ModerationBound parse_bound(const Json& j);

// {"kind": "certified" | "heuristic", "half_width": n, "bound": ...}
SearchRadius parse_radius(const Json& j);

struct ScenarioOutcome {
  Json report;
  int exit_code = kExitOk;
};

// Runs every check in order. Relative render paths resolve against base_dir.
ScenarioOutcome run_scenario(const Json& doc, const std::string& base_dir = ".");
ScenarioOutcome run_scenario_file(const std::string& path);

}  // namespace addcomp
