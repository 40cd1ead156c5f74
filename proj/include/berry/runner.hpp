#ifndef BERRY_RUNNER_HPP
#define BERRY_RUNNER_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "berry/config.hpp"
#include "berry/phase.hpp"

namespace berry {

struct SweepRow {
    double axis_value = 0.0;
    PhaseReport report;
    std::string status = "ok";  // "ok" or "error: ..."
};

struct SweepMetadata {
    std::string timestamp;
    std::string version;
    std::map<std::string, std::string> config_echo;
};

struct SweepResult {
    std::vector<double> axis_values;
    std::vector<SweepRow> rows;
    SweepMetadata metadata;
};

// Full single-run pipeline: propagate, extract phases, leakage diagnostic.
PhaseReport simulate_once(const RunConfig& cfg);

// One PhaseReport per grid point; hostile points degrade to in-row error
// status instead of aborting the sweep.
SweepResult sweep(const RunConfig& cfg);

std::string format_csv(const SweepResult& result);
std::string format_csv(const PhaseReport& report);
std::string format_json(const SweepResult& result);
std::string format_json(const PhaseReport& report);

// CLI entry points; write to cfg.output_path or stdout. Return the process
// exit code (0 ok, 2 numerical-guard failure).
int run_simulate(const RunConfig& cfg);
int run_sweep(const RunConfig& cfg);

std::map<std::string, std::string> config_echo(const RunConfig& cfg);

}  // namespace berry

#endif
