#ifndef BERRY_CONFIG_HPP
#define BERRY_CONFIG_HPP

#include <map>
#include <optional>
#include <string>

#include "berry/model.hpp"
#include "berry/phase.hpp"

namespace berry {

inline constexpr const char* kVersion = "berrysim 0.1.0";

enum class RunMode { simulate, sweep, verify };
enum class OutputFormat { csv, json };
enum class SweepAxis { omega, theta, steps };
enum class InjectedFault { none, j1_sign_flip };

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 0;
    bool log_spacing = false;

    std::vector<double> values() const;
};

struct RunConfig {
    RunMode mode = RunMode::simulate;

    // physical
    double e1 = 1.0;
    double d = 1.0;
    double efield = 0.5;
    double theta = M_PI / 3.0;
    double omega = 2.0 * M_PI / 1000.0;
    double phi0 = 0.0;

    // simulation
    int periods = 1;
    int steps = 20000;
    int stride = 1;
    StateLabel state = StateLabel::plus1;

    // sweep
    std::optional<SweepAxis> axis;
    GridSpec grid;

    // output / verify
    std::string output_path;  // empty = stdout
    OutputFormat format = OutputFormat::csv;
    unsigned long seed = 0;
    double tolerance_scale = 1.0;
    InjectedFault inject = InjectedFault::none;

    LevelParams level_params() const { return LevelParams(e1, d); }
    FieldConfig field_config() const { return FieldConfig(efield, theta, omega, phi0); }
    SimulationConfig sim_config() const;

    // Cross-field invariants (per-field ranges are checked by the domain
    // types); throws std::invalid_argument naming the offending field.
    void validate() const;
};

// Flat key-value config document, lines of "section.key = value" with '#'
// comments. Unknown keys are an error.
std::map<std::string, std::string> read_config_file(const std::string& path);

// Applies file values to cfg; keys already pinned by command-line flags
// (listed in overridden) keep their flag values.
void apply_config_file(RunConfig& cfg, const std::map<std::string, std::string>& kv,
                       const std::map<std::string, bool>& overridden);

GridSpec parse_grid(const std::string& text);
SweepAxis parse_axis(const std::string& text);
OutputFormat parse_format(const std::string& text);

std::string to_string(SweepAxis a);
std::string to_string(OutputFormat f);

}  // namespace berry

#endif
